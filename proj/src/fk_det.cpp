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

#include "fkineq/fk_det.hpp"

#include <cmath>

#include <Eigen/SVD>

namespace fkineq {

FKValue fk_det(const ComplexMatrix& a, const ToleranceConfig& tol) {
  if (a.rows() != a.cols() || a.rows() == 0) {
    throw Error(ErrorKind::kShape, "fk_det: square matrix required");
  }
  if (!all_finite(a)) throw Error(ErrorKind::kInput, "fk_det: non-finite entry");

  Eigen::JacobiSVD<ComplexMatrix> svd(a);
  const RealVector& sigma = svd.singularValues();  // descending
  const double top = sigma(0);
  const double bottom = sigma(sigma.size() - 1);
  if (top == 0.0 || bottom <= tol.singular_tol * top) return FKValue{};

  double acc = 0.0;
  for (Eigen::Index i = 0; i < sigma.size(); ++i) acc += std::log(sigma(i));
  const double log_value = acc / static_cast<double>(sigma.size());
  return FKValue{std::exp(log_value), log_value};
}

double log_fk_det_ratio(const HermitianMatrix& a, const HermitianMatrix& b,
                        const ToleranceConfig& tol) {
  if (a.dim() != b.dim()) throw Error(ErrorKind::kShape, "fk_det_ratio: dimension mismatch");
  if (!is_pd(a, tol)) throw Error(ErrorKind::kRegularity, "fk_det_ratio: A must be positive definite");
  const FKValue num = fk_det((a + b).matrix(), tol);
  const FKValue den = fk_det(a.matrix(), tol);
  return num.log_value - den.log_value;
}

double fk_det_ratio(const HermitianMatrix& a, const HermitianMatrix& b,
                    const ToleranceConfig& tol) {
  return std::exp(log_fk_det_ratio(a, b, tol));
}

}  // namespace fkineq
