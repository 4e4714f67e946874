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

// Scalar functions used as operator functions: a small catalog of operator
// monotone / operator convex / log-convex functions, finite atomic versions
// of the integral representations
//
//   monotone:  f(t) = a + b t     + sum_j w_j (l_j + 1) t   / (l_j + t)
//   convex:    f(t) = a + b t + c t^2 + sum_j w_j (l_j + 1) t^2 / (l_j + t)
//
// and sampling-based certificates of monotonicity and convexity.
//
// Text syntax (see ScalarFunction::parse):
//   power:0.5  log  log1p  inv_perturb  reciprocal  one_plus_inv  square
//   linear:a,b  resolvent:l  rep:[a,b;(l1,w1),(l2,w2)]
//   convrep:[a,b,c;(l1,w1)]  shift:<f>:<eps>  logof:<f>

#ifndef FKINEQ_OP_FUNCTIONS_HPP
#define FKINEQ_OP_FUNCTIONS_HPP

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fkineq/linalg.hpp"

namespace fkineq {

struct Atom {
  double lambda = 1.0;  // > 0
  double weight = 1.0;  // > 0
};

struct MonotoneRep {
  double a = 0.0;
  double b = 0.0;  // >= 0
  std::vector<Atom> atoms;
};

struct ConvexRep {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;  // >= 0
  std::vector<Atom> atoms;
};

struct FunctionFlags {
  bool operator_monotone = false;
  bool operator_convex = false;
  /// Scalar convexity; what the trace form of Jensen's inequality needs.
  bool convex = false;
  bool log_convex = false;
  /// f(t) > 0 for every t > 0 in the domain.
  bool positive_valued = false;
  /// a + b t, including constants.
  bool affine = false;
  bool constant = false;
};

class ScalarFunction {
 public:
  enum class Kind {
    kPower,
    kLog,
    kLog1p,
    kResolventFrac,
    kInvPerturb,
    kReciprocal,
    kOnePlusInv,
    kLinear,
    kSquare,
    kMonotoneRep,
    kConvexRep,
    kShift,
    kLogOf,
  };

  /// t^r, 0 < r <= 1.
  static ScalarFunction power(double r);
  static ScalarFunction log();
  static ScalarFunction log1p();
  /// (l + 1) t / (l + t), l > 0.
  static ScalarFunction resolvent_frac(double lambda);
  /// (1 + 1/t)^{-1} = t / (t + 1).
  static ScalarFunction inv_perturb();
  static ScalarFunction reciprocal();
  /// 1 + 1/t.
  static ScalarFunction one_plus_inv();
  static ScalarFunction linear(double a, double b);
  static ScalarFunction square();
  static ScalarFunction monotone_rep(MonotoneRep rep);
  static ScalarFunction convex_rep(ConvexRep rep);
  /// x -> f(x + eps).
  static ScalarFunction shift(const ScalarFunction& f, double eps);
  /// x -> log f(x).
  static ScalarFunction log_of(const ScalarFunction& f);

  /// Throws Error(kParse) on bad syntax and kSpecification on bad parameters.
  static ScalarFunction parse(std::string_view text);
  /// Inverse of parse.
  std::string to_string() const;

  Kind kind() const { return kind_; }
  const Interval& domain() const { return domain_; }
  const FunctionFlags& flags() const { return flags_; }
  /// Non-null only for kMonotoneRep / kConvexRep.
  const MonotoneRep* as_monotone_rep() const;
  const ConvexRep* as_convex_rep() const;

  /// Evaluates without a domain check.
  double operator()(double t) const;

 private:
  ScalarFunction() = default;
  void finalize();

  Kind kind_ = Kind::kLinear;
  double p0_ = 0.0;
  double p1_ = 0.0;
  std::shared_ptr<const MonotoneRep> mono_;
  std::shared_ptr<const ConvexRep> conv_;
  std::shared_ptr<const ScalarFunction> inner_;
  Interval domain_;
  FunctionFlags flags_;
};

/// f(t) with a domain check; throws DomainError outside the domain.
double eval_scalar(const ScalarFunction& f, double t);

/// f(A) by eigendecomposition. For representation functions the
/// sum-of-resolvents route is computed as well and the two must agree to
/// 1e-10 relative Frobenius error, otherwise kNumerical is thrown.
HermitianMatrix eval_on_matrix(const ScalarFunction& f, const HermitianMatrix& a,
                               const ToleranceConfig& tol = {});

/// a I + b A + sum w (l + 1) A (l I + A)^{-1}, via linear solves. A must be PSD.
HermitianMatrix eval_rep_resolvent(const MonotoneRep& rep, const HermitianMatrix& a,
                                   const ToleranceConfig& tol = {});
/// a I + b A + c A^2 + sum w (l + 1) A^2 (l I + A)^{-1}.
HermitianMatrix eval_rep_resolvent(const ConvexRep& rep, const HermitianMatrix& a,
                                   const ToleranceConfig& tol = {});

/// Divided-difference matrix [f(x_i) - f(x_j)] / (x_i - x_j) with f'(x_i) on
/// the diagonal from a central difference, step 1e-6 * max(1, |x|).
/// Throws kInput on coincident points and DomainError when a point (or its
/// difference stencil) leaves the domain.
HermitianMatrix loewner_matrix(const ScalarFunction& f, std::span<const double> points);

/// Relative slack used when deciding whether a Loewner matrix is PSD; the
/// finite-difference diagonal carries O(1e-10) error.
inline constexpr double kLoewnerTol = 1e-8;
bool loewner_psd(const ScalarFunction& f, std::span<const double> points);

struct SampleReport {
  int trials = 0;
  int violations = 0;
  /// Most negative lambda_min of the tested difference, divided by
  /// max(1, spectral norms involved).
  double min_gap = 0.0;
  /// The catalog flag under test (operator_monotone / operator_convex).
  bool flagged = false;
  std::uint64_t seed = 0;
  int witness_trial = -1;
  ComplexMatrix witness_a, witness_b;
  double witness_mix = 0.0;

  /// True when the sample agrees with the flag: no violations for flagged
  /// functions, at least one for unflagged ones.
  bool consistent() const { return flagged ? violations == 0 : violations > 0; }
};

/// Samples A <= B (B = A + random PSD) with spectra inside the domain and
/// tests f(B) - f(A) >= 0.
SampleReport sample_monotone(const ScalarFunction& f, int n, int trials, std::uint64_t seed,
                             const ToleranceConfig& tol = {});
/// Samples A, B and mix in [0, 1] and tests
/// mix f(A) + (1 - mix) f(B) - f(mix A + (1 - mix) B) >= 0.
SampleReport sample_convex(const ScalarFunction& f, int n, int trials, std::uint64_t seed,
                           const ToleranceConfig& tol = {});

}  // namespace fkineq

#endif  // FKINEQ_OP_FUNCTIONS_HPP
