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

#ifndef FKINEQ_TOLERANCE_HPP
#define FKINEQ_TOLERANCE_HPP

namespace fkineq {

/// Relative, dimensionless tolerances shared by every module. All values
/// must lie in [0, 1e-3].
struct ToleranceConfig {
  double hermiticity_tol = 1e-10;
  double psd_tol = 1e-10;
  double singular_tol = 1e-12;
  double equality_tol = 1e-9;
  double membership_tol = 1e-8;
  double violation_tol = 1e-9;

  /// Throws Error(kSpecification) when a field is out of range.
  void validate() const;
};

/// Hard cap: inverted matrices above this condition number are rejected.
inline constexpr double kIllConditionedCap = 1e12;

/// Soft cap: trial runners re-sample instances above this condition number.
inline constexpr double kResampleConditionCap = 1e6;

}  // namespace fkineq

#endif  // FKINEQ_TOLERANCE_HPP
