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

// Block-diagonal subalgebras M_{n_1} + ... + M_{n_k} of M_n(C), their
// trace-preserving conditional expectations (pinchings), and a small family
// of trace-preserving unital positive maps.

#ifndef FKINEQ_SUBALGEBRA_HPP
#define FKINEQ_SUBALGEBRA_HPP

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "fkineq/linalg.hpp"

namespace fkineq {

class BlockPartition {
 public:
  BlockPartition() = default;

  /// Throws kSpecification unless every size is >= 1 and the list is non-empty.
  static BlockPartition from_sizes(std::vector<int> sizes);
  /// (1, ..., 1): the diagonal masa.
  static BlockPartition diagonal(int n);
  /// (n): the full algebra.
  static BlockPartition full(int n);
  /// (ceil(n/2), floor(n/2)); equals `full` for n = 1.
  static BlockPartition halves(int n);
  /// Accepts `diag`, `full`, `halves` or a comma list such as `2,2,3`.
  /// Throws kParse on bad syntax and kSpecification if the sizes do not
  /// add up to n.
  static BlockPartition parse(std::string_view text, int n);

  const std::vector<int>& sizes() const { return sizes_; }
  int total() const { return total_; }
  int blocks() const { return static_cast<int>(sizes_.size()); }
  /// Start index of each block.
  std::vector<int> offsets() const;
  /// Index of the block containing row/column i.
  int block_of(int i) const;
  bool is_diagonal() const { return blocks() == total_; }
  bool is_full() const { return blocks() == 1; }
  /// Comma list, e.g. "2,2".
  std::string to_string() const;

  bool operator==(const BlockPartition&) const = default;

 private:
  std::vector<int> sizes_;
  int total_ = 0;
};

/// Zeroes everything outside the principal diagonal blocks.
ComplexMatrix pinch(const ComplexMatrix& a, const BlockPartition& p);
HermitianMatrix pinch(const HermitianMatrix& a, const BlockPartition& p);

/// ||A - pinch(A)||_F / max(1, ||A||_F).
double membership_residual(const ComplexMatrix& a, const BlockPartition& p);
bool is_member(const ComplexMatrix& a, const BlockPartition& p, const ToleranceConfig& tol = {});

struct Pinching {
  BlockPartition partition;
};

struct UnitaryMixing {
  std::vector<ComplexMatrix> unitaries;
  std::vector<double> weights;
};

struct TraceMap {};

/// A trace-preserving unital positive map on M_n(C).
class PositiveMapSpec {
 public:
  using Kind = std::variant<Pinching, UnitaryMixing, TraceMap>;

  static PositiveMapSpec pinching(BlockPartition p);
  /// Weights must be nonnegative and sum to 1 within 1e-12 (they are then
  /// renormalized); every U must satisfy ||U*U - I||_F <= 1e-10. Violations
  /// throw kSpecification.
  static PositiveMapSpec unitary_mixing(std::vector<std::pair<ComplexMatrix, double>> terms);
  static PositiveMapSpec trace_map();

  const Kind& kind() const { return kind_; }
  std::string describe() const;
  /// Dimension the map acts on, or 0 when it acts on every dimension.
  Eigen::Index dim() const;

 private:
  explicit PositiveMapSpec(Kind k) : kind_(std::move(k)) {}
  Kind kind_;
};

ComplexMatrix apply_map(const ComplexMatrix& a, const PositiveMapSpec& m);
HermitianMatrix apply_map(const HermitianMatrix& a, const PositiveMapSpec& m);

/// Mixing file: first line `k`, then k records each made of a weight line
/// followed by a unitary in the matrix text format.
PositiveMapSpec parse_mixing(std::string_view text);
PositiveMapSpec read_mixing_file(const std::filesystem::path& path);
std::string format_mixing(const UnitaryMixing& mix);

/// Residuals from randomized checks of the conditional-expectation axioms.
/// Residuals are relative; `positivity_min` is the most negative scaled
/// eigenvalue seen on Phi(PSD).
struct AxiomReport {
  int trials = 0;
  double linearity = 0.0;
  double unitality = 0.0;
  double positivity_min = 0.0;
  double bimodule = 0.0;
  double trace = 0.0;
  double idempotence = 0.0;
  bool passed = true;
  /// Empty on success; otherwise names the failing axiom, trial and seed.
  std::string witness;
  ComplexMatrix witness_r, witness_s1, witness_s2;
};

AxiomReport check_expectation_axioms(const BlockPartition& p, int trials, std::uint64_t seed,
                                     const ToleranceConfig& tol = {});

struct TwoPositivityReport {
  int trials = 0;
  /// Smallest eigenvalue of (Phi (x) I_2)(X) over all trials, divided by
  /// max(1, ||X||_2).
  double min_eigenvalue = 0.0;
  bool passed = true;
  std::string witness;
  ComplexMatrix witness_x;
};

/// Applies `pinch` blockwise to X in M_2(M_n) (a 2n x 2n matrix).
ComplexMatrix pinch_2x2_blocks(const ComplexMatrix& x, const BlockPartition& p);

TwoPositivityReport check_two_positivity(const BlockPartition& p, int trials, std::uint64_t seed,
                                         const ToleranceConfig& tol = {});

}  // namespace fkineq

#endif  // FKINEQ_SUBALGEBRA_HPP
