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

#include "fkineq/verifiers.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "fkineq/fk_det.hpp"
#include "fkineq/matrix_io.hpp"

namespace fkineq {

namespace {

double psd_slack(const Spectrum& s, const ToleranceConfig& tol) {
  return tol.psd_tol * std::max({1.0, std::abs(s.min()), std::abs(s.max())});
}

[[noreturn]] void precondition(std::string_view who, const std::string& what) {
  throw Error(ErrorKind::kPrecondition, std::string(who) + ": " + what);
}

/// Returns the condition number.
double require_pd(const HermitianMatrix& a, const ToleranceConfig& tol, std::string_view who,
                  const char* name = "A") {
  const Spectrum s = eig_hermitian(a);
  if (!(s.min() > 0.0) || s.min() < tol.psd_tol * std::max(1.0, s.max())) {
    std::ostringstream os;
    os << name << " must be positive definite (lambda_min = " << s.min() << ")";
    precondition(who, os.str());
  }
  const double cond = s.max() / s.min();
  if (cond > kIllConditionedCap) {
    std::ostringstream os;
    os << std::string(who) << ": ill-conditioned trial, cond(" << name << ") = " << cond;
    throw Error(ErrorKind::kIllConditioned, os.str());
  }
  return cond;
}

void require_psd(const HermitianMatrix& a, const ToleranceConfig& tol, std::string_view who,
                 const char* name = "A") {
  const Spectrum s = eig_hermitian(a);
  if (s.min() < -psd_slack(s, tol)) {
    std::ostringstream os;
    os << name << " must be positive semidefinite (lambda_min = " << s.min() << ")";
    precondition(who, os.str());
  }
}

void require_dim(const HermitianMatrix& a, const BlockPartition& p, std::string_view who) {
  if (a.dim() != p.total()) {
    throw Error(ErrorKind::kShape, std::string(who) + ": partition " + p.to_string() +
                                       " does not match dimension " + std::to_string(a.dim()));
  }
}

void require_dim(const HermitianMatrix& a, const PositiveMapSpec& m, std::string_view who) {
  if (m.dim() != 0 && m.dim() != a.dim()) {
    throw Error(ErrorKind::kShape, std::string(who) + ": map " + m.describe() +
                                       " does not match dimension " + std::to_string(a.dim()));
  }
}

double log_delta(const HermitianMatrix& a, const ToleranceConfig& tol) {
  return fk_det(a.matrix(), tol).log_value;
}

/// Log-space comparison of two determinant expressions. If either side is
/// -inf the report switches to linear values so the gap stays finite.
InequalityReport det_report(std::string_view id, double log_l, double log_r,
                            const ToleranceConfig& tol) {
  InequalityReport r;
  r.ineq_id = std::string(id);
  r.log_lhs = log_l;
  r.log_rhs = log_r;
  if (std::isfinite(log_l) && std::isfinite(log_r)) {
    r.lhs = log_l;
    r.rhs = log_r;
  } else {
    r.lhs = std::exp(log_l);
    r.rhs = std::exp(log_r);
    r.notes = "linear scale: singular operand";
  }
  r.gap = r.rhs - r.lhs;
  classify(r, tol);
  return r;
}

/// LHS <= RHS in the PSD order.
InequalityReport op_report(std::string_view id, const HermitianMatrix& lhs,
                           const HermitianMatrix& rhs, const ToleranceConfig& tol) {
  InequalityReport r;
  r.ineq_id = std::string(id);
  const Spectrum d = eig_hermitian(rhs - lhs);
  r.lhs = lhs.matrix().norm();
  r.rhs = rhs.matrix().norm();
  r.gap = d.min();
  r.spread = std::max(std::abs(d.min()), std::abs(d.max()));
  classify(r, tol);
  return r;
}

InequalityReport scalar_report(std::string_view id, double lhs, double rhs,
                               const ToleranceConfig& tol) {
  InequalityReport r;
  r.ineq_id = std::string(id);
  r.lhs = lhs;
  r.rhs = rhs;
  r.gap = rhs - lhs;
  classify(r, tol);
  return r;
}

void set_membership(InequalityReport& r, const HermitianMatrix& a, const BlockPartition& p,
                    const ToleranceConfig& tol) {
  r.membership_residual = membership_residual(a.matrix(), p);
  r.equality_expected = *r.membership_residual <= tol.membership_tol;
}

HermitianMatrix identity_like(const HermitianMatrix& a) { return HermitianMatrix::identity(a.dim()); }

}  // namespace

InequalityReport verify_hadamard(const HermitianMatrix& a, const ToleranceConfig& tol) {
  constexpr std::string_view who = "hadamard";
  const double cond = require_pd(a, tol, who);
  const double n = static_cast<double>(a.dim());
  double diag_log = 0.0;
  for (Eigen::Index i = 0; i < a.dim(); ++i) diag_log += std::log(a(i, i).real());
  InequalityReport r = scalar_report(ineq::kHadamard, n * log_delta(a, tol), diag_log, tol);
  r.log_lhs = r.lhs;
  r.log_rhs = r.rhs;
  set_membership(r, a, BlockPartition::diagonal(static_cast<int>(a.dim())), tol);
  r.condition = cond;
  return r;
}

InequalityReport verify_fischer(const HermitianMatrix& a, const BlockPartition& p,
                                const ToleranceConfig& tol) {
  constexpr std::string_view who = "fischer";
  require_dim(a, p, who);
  const double cond = require_pd(a, tol, who);
  const double n = static_cast<double>(a.dim());
  double blocks_log = 0.0;
  const auto offs = p.offsets();
  for (std::size_t b = 0; b < offs.size(); ++b) {
    const int k = p.sizes()[b];
    const ComplexMatrix blk = a.matrix().block(offs[b], offs[b], k, k);
    blocks_log += k * fk_det(blk, tol).log_value;
  }
  InequalityReport r = scalar_report(ineq::kFischer, n * log_delta(a, tol), blocks_log, tol);
  r.log_lhs = r.lhs;
  r.log_rhs = r.rhs;
  set_membership(r, a, p, tol);
  r.condition = cond;
  return r;
}

ArvesonReports verify_arveson(const HermitianMatrix& a, const BlockPartition& p,
                              const ToleranceConfig& tol) {
  constexpr std::string_view who = "arveson";
  require_dim(a, p, who);
  require_psd(a, tol, who);
  const double log_a = log_delta(a, tol);

  InequalityReport right =
      det_report(ineq::kArvesonRight, log_a, log_delta(pinch(a, p), tol), tol);
  set_membership(right, a, p, tol);
  // The iff clause is stated for regular A only.
  if (!std::isfinite(log_a)) right.equality_expected.reset();

  std::optional<InequalityReport> left;
  if (std::isfinite(log_a) && is_pd(a, tol)) {
    const double cond = require_pd(a, tol, who);
    right.condition = cond;
    const HermitianMatrix inv = inverse_pd(a, tol);
    // log Delta(Phi(A^{-1})^{-1}) = -log Delta(Phi(A^{-1})).
    left = det_report(ineq::kArvesonLeft, -log_delta(pinch(inv, p), tol), log_a, tol);
    set_membership(*left, a, p, tol);
    left->condition = cond;
  }
  return ArvesonReports{std::move(left), std::move(right)};
}

InequalityReport verify_square(const HermitianMatrix& a, const BlockPartition& p,
                               const ToleranceConfig& tol) {
  require_dim(a, p, "square");
  const HermitianMatrix pa = pinch(a, p);
  const HermitianMatrix lhs = HermitianMatrix::symmetrized(pa.matrix() * pa.matrix());
  const HermitianMatrix rhs =
      pinch(HermitianMatrix::symmetrized(a.matrix() * a.matrix()), p);
  InequalityReport r = op_report(ineq::kSquare, lhs, rhs, tol);
  set_membership(r, a, p, tol);
  return r;
}

InequalityReport verify_inverse(const HermitianMatrix& a, const BlockPartition& p,
                                const ToleranceConfig& tol) {
  constexpr std::string_view who = "inverse";
  require_dim(a, p, who);
  const double cond = require_pd(a, tol, who);
  const HermitianMatrix lhs = inverse_pd(pinch(a, p), tol);
  const HermitianMatrix rhs = pinch(inverse_pd(a, tol), p);
  InequalityReport r = op_report(ineq::kInverse, lhs, rhs, tol);
  set_membership(r, a, p, tol);
  r.condition = cond;
  return r;
}

namespace {

// X (lI + X)^{-1} from the spectrum, cross-checked against the resolvent
// identities computed with a linear solve.
struct ResolventParts {
  HermitianMatrix frac;     // X (lI + X)^{-1}
  HermitianMatrix sq_frac;  // X^2 (lI + X)^{-1}
};

ResolventParts resolvent_parts(const HermitianMatrix& x, double lambda,
                               const ToleranceConfig& tol) {
  const Eigen::Index n = x.dim();
  const ComplexMatrix id = ComplexMatrix::Identity(n, n);
  const Spectrum s = eig_hermitian(x);
  const HermitianMatrix frac = apply_fn(
      s, [lambda](double t) { return t / (lambda + t); }, Interval::nonnegative(), tol);
  const HermitianMatrix sq_frac = apply_fn(
      s, [lambda](double t) { return t * t / (lambda + t); }, Interval::nonnegative(), tol);

  Eigen::LLT<ComplexMatrix> llt(x.matrix() + lambda * id);
  if (llt.info() != Eigen::Success) {
    throw Error(ErrorKind::kNumerical, "resolvent: lambda I + X is not positive definite");
  }
  const ComplexMatrix res = llt.solve(id);
  const ComplexMatrix frac_alt = id - lambda * res;
  const ComplexMatrix sq_alt = x.matrix() - lambda * id + lambda * lambda * res;
  const double e1 = (frac.matrix() - frac_alt).norm() / std::max(1.0, frac.matrix().norm());
  const double e2 = (sq_frac.matrix() - sq_alt).norm() /
                    std::max({1.0, sq_frac.matrix().norm(), x.matrix().norm()});
  if (e1 > 1e-10 || e2 > 1e-10) {
    std::ostringstream os;
    os << "resolvent: identity self-check failed (" << e1 << ", " << e2 << ")";
    throw Error(ErrorKind::kNumerical, os.str());
  }
  return {frac, sq_frac};
}

}  // namespace

ResolventReports verify_resolvent(const HermitianMatrix& a, const BlockPartition& p,
                                  double lambda, const ToleranceConfig& tol) {
  constexpr std::string_view who = "resolvent";
  require_dim(a, p, who);
  require_psd(a, tol, who);
  if (!(lambda > 0.0) || !std::isfinite(lambda)) precondition(who, "lambda must be positive");
  const HermitianMatrix pa = pinch(a, p);
  const ResolventParts of_a = resolvent_parts(a, lambda, tol);
  const ResolventParts of_pa = resolvent_parts(pa, lambda, tol);

  InequalityReport first = op_report(ineq::kResolventI, pinch(of_a.frac, p), of_pa.frac, tol);
  InequalityReport second =
      op_report(ineq::kResolventII, of_pa.sq_frac, pinch(of_a.sq_frac, p), tol);
  set_membership(first, a, p, tol);
  set_membership(second, a, p, tol);
  first.notes = second.notes = "lambda=" + format_double(lambda);
  return ResolventReports{std::move(first), std::move(second)};
}

InequalityReport verify_op_monotone(const ScalarFunction& f, const HermitianMatrix& a,
                                    const BlockPartition& p, const ToleranceConfig& tol) {
  constexpr std::string_view who = "op_monotone";
  require_dim(a, p, who);
  if (!f.flags().operator_monotone) precondition(who, f.to_string() + " is not operator monotone");
  const double cond = require_pd(a, tol, who);

  InequalityReport r;
  if (f.domain().lo == 0.0 && f.domain().lo_open) {
    // f lives on (0, inf): move to g(x) = f(x + eps/2) on A - eps/2 I, which
    // has spectrum in [eps/2, inf), and compare there.
    const double eps = lambda_min(a);
    const ScalarFunction g = ScalarFunction::shift(f, eps / 2.0);
    const HermitianMatrix a_eps = a - HermitianMatrix::identity(a.dim()) * (eps / 2.0);
    const HermitianMatrix lhs = pinch(eval_on_matrix(g, a_eps, tol), p);
    const HermitianMatrix rhs = eval_on_matrix(g, pinch(a_eps, p), tol);
    r = op_report(ineq::kOpMonotone, lhs, rhs, tol);
    r.notes = "evaluated via shift by eps/2, eps=" + format_double(eps);
  } else {
    const HermitianMatrix lhs = pinch(eval_on_matrix(f, a, tol), p);
    const HermitianMatrix rhs = eval_on_matrix(f, pinch(a, p), tol);
    r = op_report(ineq::kOpMonotone, lhs, rhs, tol);
  }
  set_membership(r, a, p, tol);
  if (f.flags().affine) r.equality_expected = true;
  r.function = f.to_string();
  r.condition = cond;
  return r;
}

InequalityReport verify_op_convex(const ScalarFunction& f, const HermitianMatrix& a,
                                  const BlockPartition& p, const ToleranceConfig& tol) {
  constexpr std::string_view who = "op_convex";
  require_dim(a, p, who);
  if (!f.flags().operator_convex) precondition(who, f.to_string() + " is not operator convex");
  const double cond = require_pd(a, tol, who);
  const HermitianMatrix lhs = eval_on_matrix(f, pinch(a, p), tol);
  const HermitianMatrix rhs = pinch(eval_on_matrix(f, a, tol), p);
  InequalityReport r = op_report(ineq::kOpConvex, lhs, rhs, tol);
  set_membership(r, a, p, tol);
  if (f.flags().affine) r.equality_expected = true;
  r.function = f.to_string();
  r.condition = cond;
  return r;
}

InequalityReport verify_det_monotone(const ScalarFunction& f, const HermitianMatrix& a,
                                     const BlockPartition& p, const ToleranceConfig& tol) {
  constexpr std::string_view who = "det_monotone";
  require_dim(a, p, who);
  const FunctionFlags& fl = f.flags();
  if (!fl.operator_monotone || !fl.positive_valued || fl.constant) {
    precondition(who, f.to_string() + " must be non-constant, positive-valued and operator monotone");
  }
  const double cond = require_pd(a, tol, who);
  InequalityReport r =
      det_report(ineq::kDetMonotone, log_delta(eval_on_matrix(f, a, tol), tol),
                 log_delta(eval_on_matrix(f, pinch(a, p), tol), tol), tol);
  set_membership(r, a, p, tol);
  r.function = f.to_string();
  r.condition = cond;
  return r;
}

InequalityReport verify_det_perturb(const HermitianMatrix& a, const BlockPartition& p,
                                    const ToleranceConfig& tol) {
  constexpr std::string_view who = "det_perturb";
  require_dim(a, p, who);
  const double cond = require_pd(a, tol, who);
  const HermitianMatrix id = identity_like(a);
  InequalityReport r =
      det_report(ineq::kDetPerturb, log_delta(id + inverse_pd(pinch(a, p), tol), tol),
                 log_delta(id + inverse_pd(a, tol), tol), tol);
  set_membership(r, a, p, tol);
  r.condition = cond;
  return r;
}

namespace {

void require_member_psd(const HermitianMatrix& b, const BlockPartition& p,
                        const ToleranceConfig& tol, std::string_view who) {
  require_psd(b, tol, who, "B");
  if (!is_member(b.matrix(), p, tol)) precondition(who, "B must lie in the block subalgebra");
}

bool is_zero_matrix(const HermitianMatrix& b, const HermitianMatrix& a, const ToleranceConfig& tol) {
  return b.matrix().norm() <= tol.membership_tol * std::max(1.0, a.matrix().norm());
}

}  // namespace

InequalityReport verify_matic1(const HermitianMatrix& a, const HermitianMatrix& b,
                               const BlockPartition& p, const ToleranceConfig& tol) {
  constexpr std::string_view who = "matic1";
  require_dim(a, p, who);
  require_dim(b, p, who);
  const double cond = require_pd(a, tol, who);
  require_member_psd(b, p, tol, who);
  const HermitianMatrix pa = pinch(a, p);
  const double lhs = log_delta(pa + b, tol) - log_delta(pa, tol);
  const double rhs = log_delta(a + b, tol) - log_delta(a, tol);
  InequalityReport r = scalar_report(ineq::kMatic1, lhs, rhs, tol);
  r.membership_residual = membership_residual(a.matrix(), p);
  if (is_zero_matrix(b, a, tol)) {
    r.equality_expected = true;
    r.notes = "B = 0";
  } else if (is_pd(b, tol)) {
    r.equality_expected = *r.membership_residual <= tol.membership_tol;
  } else {
    r.notes = "B singular: no equality characterization";
  }
  r.condition = cond;
  return r;
}

InequalityReport verify_matic2(const HermitianMatrix& a, const HermitianMatrix& b,
                               const BlockPartition& p, const ToleranceConfig& tol) {
  constexpr std::string_view who = "matic2";
  require_dim(a, p, who);
  require_dim(b, p, who);
  const double cond = require_pd(a, tol, who);
  require_member_psd(b, p, tol, who);
  const HermitianMatrix a_inv = inverse_pd(a, tol);
  const HermitianMatrix c = inverse_pd(pinch(a_inv, p), tol);
  const double lhs = log_delta(a + b, tol) - log_delta(a, tol);
  const double rhs = log_delta(c + b, tol) - log_delta(c, tol);
  InequalityReport r = scalar_report(ineq::kMatic2, lhs, rhs, tol);
  const HermitianMatrix b_half = sqrt_psd(b, tol);
  const HermitianMatrix core =
      HermitianMatrix::symmetrized(b_half.matrix() * a_inv.matrix() * b_half.matrix());
  set_membership(r, core, p, tol);
  r.notes = "A membership residual " + format_double(membership_residual(a.matrix(), p));
  r.condition = cond;
  return r;
}

InequalityReport verify_matic_var_counterexample(const HermitianMatrix& b,
                                                 const BlockPartition& p,
                                                 const ToleranceConfig& tol) {
  constexpr std::string_view who = "matic_var_counterexample";
  require_dim(b, p, who);
  require_psd(b, tol, who, "B");
  const double resid = membership_residual(b.matrix(), p);
  if (resid <= tol.membership_tol) precondition(who, "B must not lie in the block subalgebra");
  const HermitianMatrix id = identity_like(b);
  // A = I: Delta(Phi(I + B)) / Delta(Phi(I)) against Delta(I + B) / Delta(I).
  const double lhs = log_delta(pinch(id + b, p), tol) - log_delta(pinch(id, p), tol);
  const double rhs = log_delta(id + b, tol) - log_delta(id, tol);
  InequalityReport r = scalar_report(ineq::kMaticVar, lhs, rhs, tol);
  r.log_lhs = lhs;
  r.log_rhs = rhs;
  r.membership_residual = resid;
  r.equality_expected = false;
  r.notes = "A = I";
  return r;
}

InequalityReport verify_trace_jensen(const ScalarFunction& f, const HermitianMatrix& a,
                                     const PositiveMapSpec& m, const ToleranceConfig& tol) {
  constexpr std::string_view who = "trace_jensen";
  require_dim(a, m, who);
  if (!f.flags().convex) precondition(who, f.to_string() + " is not convex");
  const Spectrum sa = eig_hermitian(a);
  const HermitianMatrix ma = apply_map(a, m);
  const Spectrum sm = eig_hermitian(ma);
  const double slack = psd_slack(sa, tol);
  if (sm.min() < sa.min() - slack || sm.max() > sa.max() + slack) {
    std::ostringstream os;
    os << "trace_jensen: spectrum of M(A) [" << sm.min() << ", " << sm.max()
       << "] leaves [" << sa.min() << ", " << sa.max() << "]";
    throw Error(ErrorKind::kNumerical, os.str());
  }
  const double lhs = normalized_trace(eval_on_matrix(f, ma, tol).matrix()).real();
  const double rhs = normalized_trace(apply_map(eval_on_matrix(f, a, tol), m).matrix()).real();
  InequalityReport r = scalar_report(ineq::kTraceJensen, lhs, rhs, tol);
  if (f.flags().affine) r.equality_expected = true;
  r.function = f.to_string();
  r.map = m.describe();
  return r;
}

InequalityReport verify_logconvex_det(const ScalarFunction& f, const HermitianMatrix& a,
                                      const PositiveMapSpec& m, const ToleranceConfig& tol) {
  constexpr std::string_view who = "logconvex_det";
  require_dim(a, m, who);
  if (!f.flags().log_convex) precondition(who, f.to_string() + " is not log-convex");
  require_psd(a, tol, who);
  const HermitianMatrix ma = apply_map(a, m);
  InequalityReport r = det_report(ineq::kLogconvexDet, log_delta(eval_on_matrix(f, ma, tol), tol),
                                  log_delta(eval_on_matrix(f, a, tol), tol), tol);
  if (f.flags().constant) r.equality_expected = true;
  r.function = f.to_string();
  r.map = m.describe();
  return r;
}

UnitPositiveHadamardReports verify_unit_positive_hadamard(const HermitianMatrix& a,
                                                          const PositiveMapSpec& m,
                                                          const ToleranceConfig& tol) {
  constexpr std::string_view who = "up_hadamard";
  require_dim(a, m, who);
  require_psd(a, tol, who);
  const double log_a = log_delta(a, tol);
  UnitPositiveHadamardReports out{
      det_report(ineq::kUpHadamard, log_a, log_delta(apply_map(a, m), tol), tol), std::nullopt};
  out.right.part = "right";
  out.right.map = m.describe();
  if (std::isfinite(log_a) && is_pd(a, tol)) {
    const double cond = require_pd(a, tol, who);
    const HermitianMatrix m_inv = apply_map(inverse_pd(a, tol), m);
    out.left = det_report(ineq::kUpHadamard, -log_delta(m_inv, tol), log_a, tol);
    out.left->part = "left";
    out.left->map = m.describe();
    out.left->condition = cond;
    out.right.condition = cond;
  }
  return out;
}

InequalityReport verify_unit_positive_perturb(const HermitianMatrix& a, const PositiveMapSpec& m,
                                              const ToleranceConfig& tol) {
  constexpr std::string_view who = "up_perturb";
  require_dim(a, m, who);
  const double cond = require_pd(a, tol, who);
  const HermitianMatrix id = identity_like(a);
  InequalityReport r =
      det_report(ineq::kUpPerturb, log_delta(id + inverse_pd(apply_map(a, m), tol), tol),
                 log_delta(id + inverse_pd(a, tol), tol), tol);
  r.map = m.describe();
  r.condition = cond;
  return r;
}

InequalityReport verify_unit_positive_matic(const HermitianMatrix& a, const HermitianMatrix& b,
                                            const PositiveMapSpec& m,
                                            const ToleranceConfig& tol) {
  constexpr std::string_view who = "up_matic";
  require_dim(a, m, who);
  require_dim(b, m, who);
  const double cond = require_pd(a, tol, who);
  require_psd(b, tol, who, "B");
  const HermitianMatrix c = inverse_pd(apply_map(inverse_pd(a, tol), m), tol);
  const double lhs = log_delta(a + b, tol) - log_delta(a, tol);
  const double rhs = log_delta(apply_map(a, m) + apply_map(b, m), tol) - log_delta(c, tol);
  InequalityReport r = scalar_report(ineq::kUpMatic, lhs, rhs, tol);
  r.log_lhs = lhs;
  r.log_rhs = rhs;
  r.map = m.describe();
  r.condition = cond;
  return r;
}

InequalityReport verify_gaussian_entropy(const HermitianMatrix& sigma, const BlockPartition& p,
                                         const ToleranceConfig& tol) {
  constexpr std::string_view who = "gaussian_entropy";
  require_dim(sigma, p, who);
  const double cond = require_pd(sigma, tol, who, "Sigma");
  const double c = std::log(2.0 * M_PI * M_E);
  const double n = static_cast<double>(sigma.dim());
  const double whole = 0.5 * (n * c + n * log_delta(sigma, tol));
  double parts = 0.0;
  const auto offs = p.offsets();
  for (std::size_t b = 0; b < offs.size(); ++b) {
    const int k = p.sizes()[b];
    const ComplexMatrix blk = sigma.matrix().block(offs[b], offs[b], k, k);
    parts += 0.5 * (k * c + k * fk_det(blk, tol).log_value);
  }
  InequalityReport r = scalar_report(ineq::kGaussianEntropy, whole, parts, tol);
  set_membership(r, sigma, p, tol);
  r.condition = cond;
  return r;
}

}  // namespace fkineq
