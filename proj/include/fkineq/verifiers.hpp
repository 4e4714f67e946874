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

// One checkable predicate per determinant / operator inequality. Each
// verifier checks its hypotheses (kPrecondition otherwise), evaluates both
// sides, and fills an InequalityReport including what the equality
// characterization predicts for the given inputs.
//
// Phi below is the pinching onto the block subalgebra given by the
// partition; M is a general trace-preserving unital positive map.

#ifndef FKINEQ_VERIFIERS_HPP
#define FKINEQ_VERIFIERS_HPP

#include <optional>
#include <string_view>

#include "fkineq/linalg.hpp"
#include "fkineq/op_functions.hpp"
#include "fkineq/report.hpp"
#include "fkineq/subalgebra.hpp"

namespace fkineq {

namespace ineq {
inline constexpr std::string_view kHadamard = "hadamard";
inline constexpr std::string_view kFischer = "fischer";
inline constexpr std::string_view kArvesonLeft = "arveson_left";
inline constexpr std::string_view kArvesonRight = "arveson_right";
inline constexpr std::string_view kSquare = "square";
inline constexpr std::string_view kInverse = "inverse";
inline constexpr std::string_view kResolventI = "resolvent_i";
inline constexpr std::string_view kResolventII = "resolvent_ii";
inline constexpr std::string_view kOpMonotone = "op_monotone";
inline constexpr std::string_view kOpConvex = "op_convex";
inline constexpr std::string_view kDetMonotone = "det_monotone";
inline constexpr std::string_view kDetPerturb = "det_perturb";
inline constexpr std::string_view kMatic1 = "matic1";
inline constexpr std::string_view kMatic2 = "matic2";
inline constexpr std::string_view kMaticVar = "matic_var_counterexample";
inline constexpr std::string_view kTraceJensen = "trace_jensen";
inline constexpr std::string_view kLogconvexDet = "logconvex_det";
inline constexpr std::string_view kUpHadamard = "up_hadamard";
inline constexpr std::string_view kUpPerturb = "up_perturb";
inline constexpr std::string_view kUpMatic = "up_matic";
inline constexpr std::string_view kGaussianEntropy = "gaussian_entropy";
}  // namespace ineq

/// det A <= prod a_ii, compared as n log Delta(A) <= sum log a_ii.
/// Equality expected iff A is diagonal.
InequalityReport verify_hadamard(const HermitianMatrix& a, const ToleranceConfig& tol = {});

/// log det A <= sum_i log det A_ii. Equality expected iff A is block diagonal.
InequalityReport verify_fischer(const HermitianMatrix& a, const BlockPartition& p,
                                const ToleranceConfig& tol = {});

struct ArvesonReports {
  /// Delta(Phi(A^{-1})^{-1}) <= Delta(A); only for regular A.
  std::optional<InequalityReport> left;
  /// Delta(A) <= Delta(Phi(A)); also for singular PSD A.
  InequalityReport right;
};
ArvesonReports verify_arveson(const HermitianMatrix& a, const BlockPartition& p,
                              const ToleranceConfig& tol = {});

/// Phi(A)^2 <= Phi(A^2) for Hermitian A.
InequalityReport verify_square(const HermitianMatrix& a, const BlockPartition& p,
                               const ToleranceConfig& tol = {});
/// Phi(A)^{-1} <= Phi(A^{-1}) for PD A.
InequalityReport verify_inverse(const HermitianMatrix& a, const BlockPartition& p,
                                const ToleranceConfig& tol = {});

struct ResolventReports {
  /// Phi(A (lI + A)^{-1}) <= Phi(A) (lI + Phi(A))^{-1}.
  InequalityReport first;
  /// Phi(A)^2 (lI + Phi(A))^{-1} <= Phi(A^2 (lI + A)^{-1}).
  InequalityReport second;
};
/// Also checks X(lI + X)^{-1} = I - l(lI + X)^{-1} and
/// X^2(lI + X)^{-1} = X - lI + l^2(lI + X)^{-1} for X = A, Phi(A) to 1e-10
/// relative; a failure throws kNumerical.
ResolventReports verify_resolvent(const HermitianMatrix& a, const BlockPartition& p,
                                  double lambda, const ToleranceConfig& tol = {});

/// Phi(f(A)) <= f(Phi(A)) for operator monotone f. Functions on (0, inf)
/// are evaluated through g(x) = f(x + eps/2) on A - eps/2 I with
/// eps = lambda_min(A). Equality expected iff A is a member or f is affine.
InequalityReport verify_op_monotone(const ScalarFunction& f, const HermitianMatrix& a,
                                    const BlockPartition& p, const ToleranceConfig& tol = {});

/// f(Phi(A)) <= Phi(f(A)) for operator convex f.
InequalityReport verify_op_convex(const ScalarFunction& f, const HermitianMatrix& a,
                                  const BlockPartition& p, const ToleranceConfig& tol = {});

/// Delta(f(A)) <= Delta(f(Phi(A))) for non-constant positive-valued
/// operator monotone f. Equality expected iff A is a member.
InequalityReport verify_det_monotone(const ScalarFunction& f, const HermitianMatrix& a,
                                     const BlockPartition& p, const ToleranceConfig& tol = {});

/// Delta(I + Phi(A)^{-1}) <= Delta(I + A^{-1}).
InequalityReport verify_det_perturb(const HermitianMatrix& a, const BlockPartition& p,
                                    const ToleranceConfig& tol = {});

/// Delta(Phi(A) + B) / Delta(Phi(A)) <= Delta(A + B) / Delta(A) for PD A and
/// PSD B in the subalgebra. Equality expected iff B = 0, or B is PD and A is
/// a member; otherwise no expectation is set.
InequalityReport verify_matic1(const HermitianMatrix& a, const HermitianMatrix& b,
                               const BlockPartition& p, const ToleranceConfig& tol = {});

/// Delta(A + B) / Delta(A) <= Delta(C + B) / Delta(C), C = Phi(A^{-1})^{-1}.
/// Equality expected iff B^{1/2} A^{-1} B^{1/2} is in the subalgebra.
InequalityReport verify_matic2(const HermitianMatrix& a, const HermitianMatrix& b,
                               const BlockPartition& p, const ToleranceConfig& tol = {});

/// The generalized form Delta(Phi(A + B)) / Delta(Phi(A)) <= Delta(A + B) /
/// Delta(A) evaluated at A = I. B must be PSD and not in the subalgebra; the
/// report is expected to show a strict violation.
InequalityReport verify_matic_var_counterexample(const HermitianMatrix& b,
                                                 const BlockPartition& p,
                                                 const ToleranceConfig& tol = {});

/// tr f(M(A)) <= tr M(f(A)) for convex f, with the spectrum of M(A) checked
/// to stay inside [lambda_min(A), lambda_max(A)].
InequalityReport verify_trace_jensen(const ScalarFunction& f, const HermitianMatrix& a,
                                     const PositiveMapSpec& m, const ToleranceConfig& tol = {});

/// Delta(f(M(A))) <= Delta(f(A)) for positive log-convex f.
InequalityReport verify_logconvex_det(const ScalarFunction& f, const HermitianMatrix& a,
                                      const PositiveMapSpec& m, const ToleranceConfig& tol = {});

struct UnitPositiveHadamardReports {
  /// Delta(A) <= Delta(M(A)).
  InequalityReport right;
  /// Delta(M(A^{-1})^{-1}) <= Delta(A); only for regular A.
  std::optional<InequalityReport> left;
};
UnitPositiveHadamardReports verify_unit_positive_hadamard(const HermitianMatrix& a,
                                                          const PositiveMapSpec& m,
                                                          const ToleranceConfig& tol = {});
/// Delta(I + M(A)^{-1}) <= Delta(I + A^{-1}).
InequalityReport verify_unit_positive_perturb(const HermitianMatrix& a, const PositiveMapSpec& m,
                                              const ToleranceConfig& tol = {});
/// Delta(A + B) / Delta(A) <= Delta(M(A) + M(B)) / Delta(M(A^{-1})^{-1}).
InequalityReport verify_unit_positive_matic(const HermitianMatrix& a, const HermitianMatrix& b,
                                            const PositiveMapSpec& m,
                                            const ToleranceConfig& tol = {});

/// Entropy of N(0, Sigma) against the sum of the entropies of the block
/// marginals, h = 1/2 ln((2 pi e)^k det Sigma_k). Equality expected iff the
/// blocks are independent (Sigma block diagonal).
InequalityReport verify_gaussian_entropy(const HermitianMatrix& sigma, const BlockPartition& p,
                                         const ToleranceConfig& tol = {});

}  // namespace fkineq

#endif  // FKINEQ_VERIFIERS_HPP
