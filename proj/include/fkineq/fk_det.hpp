// Copyright 2026 The fkineq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Fuglede-Kadison determinant on M_n(C) with the normalized trace:
// Delta(A) = exp(tr log |A|) = |det A|^(1/n), extended analytically by
// Delta(A) = 0 for singular A.

#ifndef FKINEQ_FK_DET_HPP
#define FKINEQ_FK_DET_HPP

#include "fkineq/linalg.hpp"

namespace fkineq {

struct FKValue {
  double value = 0.0;
  /// -inf exactly when value == 0.
  double log_value = -std::numeric_limits<double>::infinity();

  bool is_zero() const { return value == 0.0; }
};

/// Singular values come from a Jacobi SVD. A matrix whose smallest singular
/// value is at or below singular_tol * sigma_max (or that is zero) is
/// singular and gets Delta = 0.
FKValue fk_det(const ComplexMatrix& a, const ToleranceConfig& tol = {});

/// log Delta(A + B) - log Delta(A) for PD A and PSD B. Throws kRegularity
/// if A is not PD.
double log_fk_det_ratio(const HermitianMatrix& a, const HermitianMatrix& b,
                        const ToleranceConfig& tol = {});
/// exp(log_fk_det_ratio(a, b)).
double fk_det_ratio(const HermitianMatrix& a, const HermitianMatrix& b,
                    const ToleranceConfig& tol = {});

}  // namespace fkineq

#endif  // FKINEQ_FK_DET_HPP
