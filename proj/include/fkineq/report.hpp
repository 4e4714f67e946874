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

#ifndef FKINEQ_REPORT_HPP
#define FKINEQ_REPORT_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "fkineq/tolerance.hpp"

namespace fkineq {

/// One evaluated inequality. Orientation: gap = rhs - lhs, and gap >= 0
/// means the inequality holds.
///
/// Scalar and determinant inequalities compare numbers (determinant
/// inequalities in log space; log_lhs / log_rhs are kept as well). When a
/// determinant side vanishes the report falls back to linear Delta values so
/// the gap stays finite. Operator inequalities set gap = lambda_min(RHS - LHS)
/// with lhs / rhs the Frobenius norms of the two sides, and decide equality
/// from the largest |eigenvalue| of RHS - LHS (`spread`).
struct InequalityReport {
  std::string ineq_id;
  /// Distinguishes the two halves of a paired inequality sharing one id.
  std::string part;
  double lhs = 0.0;
  double rhs = 0.0;
  double gap = 0.0;
  /// max(1, |lhs|, |rhs|).
  double scale = 1.0;
  /// Operator inequalities only: max |lambda(RHS - LHS)|.
  std::optional<double> spread;
  std::optional<double> log_lhs;
  std::optional<double> log_rhs;
  bool holds = true;
  bool equality_detected = false;
  /// What the equality characterization predicts for these inputs; empty
  /// when no characterization applies.
  std::optional<bool> equality_expected;
  /// Relative distance to the subalgebra of the matrix the equality clause
  /// is about.
  std::optional<double> membership_residual;
  /// Largest condition number among PD inputs that get inverted.
  double condition = 1.0;

  // Provenance, filled by the trial runner.
  std::uint64_t seed = 0;
  int trial = -1;
  int n = 0;
  std::string partition;
  std::string function;
  std::string map;
  std::string notes;
};

/// Sets scale, holds and equality_detected from lhs / rhs / gap (and
/// spread, when present) using violation_tol and equality_tol.
void classify(InequalityReport& r, const ToleranceConfig& tol);

/// One JSON object, no trailing newline. Non-finite numbers become null.
std::string to_json_line(const InequalityReport& r);
std::string csv_header();
std::string to_csv_row(const InequalityReport& r);

}  // namespace fkineq

#endif  // FKINEQ_REPORT_HPP
