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

#include "fkineq/op_functions.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <optional>
#include <sstream>

#include "fkineq/matrix_io.hpp"
#include "fkineq/sampling.hpp"

namespace fkineq {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::string strip(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

double parse_num(std::string_view raw, std::string_view context) {
  const std::string s = strip(raw);
  double v = 0.0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  if (!s.empty() && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (s.empty() || ec != std::errc() || ptr != last || !std::isfinite(v)) {
    throw Error(ErrorKind::kParse,
                "function '" + std::string(context) + "': bad number '" + s + "'");
  }
  return v;
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t p = s.find(sep, start);
    out.push_back(strip(s.substr(start, p == std::string_view::npos ? std::string_view::npos
                                                                   : p - start)));
    if (p == std::string_view::npos) break;
    start = p + 1;
  }
  return out;
}

// "a,b;(l1,w1),(l2,w2)" -> coefficients + atoms.
void parse_rep_body(std::string_view body, std::string_view context, std::vector<double>& coeffs,
                    std::vector<Atom>& atoms) {
  const auto fail = [&](const char* msg) {
    throw Error(ErrorKind::kParse, "function '" + std::string(context) + "': " + msg);
  };
  const std::size_t semi = body.find(';');
  for (const auto& c : split(body.substr(0, semi), ',')) coeffs.push_back(parse_num(c, context));
  if (semi == std::string_view::npos) return;
  const std::string rest = strip(body.substr(semi + 1));
  std::size_t i = 0;
  while (i < rest.size()) {
    if (rest[i] != '(') fail("atoms must be '(l,w)'");
    const std::size_t close = rest.find(')', i);
    if (close == std::string::npos) fail("unclosed atom");
    const auto parts = split(std::string_view(rest).substr(i + 1, close - i - 1), ',');
    if (parts.size() != 2) fail("atom needs (l,w)");
    atoms.push_back(Atom{parse_num(parts[0], context), parse_num(parts[1], context)});
    i = close + 1;
    while (i < rest.size() && std::isspace(static_cast<unsigned char>(rest[i]))) ++i;
    if (i < rest.size()) {
      if (rest[i] != ',') fail("expected ',' between atoms");
      ++i;
      while (i < rest.size() && std::isspace(static_cast<unsigned char>(rest[i]))) ++i;
      if (i == rest.size()) fail("trailing ','");
    }
  }
}

void validate_atoms(const std::vector<Atom>& atoms) {
  for (const Atom& at : atoms) {
    if (!(at.lambda > 0.0) || !(at.weight > 0.0) || !std::isfinite(at.lambda) ||
        !std::isfinite(at.weight)) {
      throw Error(ErrorKind::kSpecification, "representation atoms need lambda > 0 and weight > 0");
    }
  }
}

std::string atoms_text(const std::vector<Atom>& atoms) {
  std::string out;
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    if (i > 0) out += ',';
    out += "(" + format_double(atoms[i].lambda) + "," + format_double(atoms[i].weight) + ")";
  }
  return out;
}

}  // namespace

ScalarFunction ScalarFunction::power(double r) {
  if (!(r > 0.0 && r <= 1.0)) throw Error(ErrorKind::kSpecification, "power: exponent must lie in (0, 1]");
  ScalarFunction f;
  f.kind_ = Kind::kPower;
  f.p0_ = r;
  f.finalize();
  return f;
}

ScalarFunction ScalarFunction::log() {
  ScalarFunction f;
  f.kind_ = Kind::kLog;
  f.finalize();
  return f;
}

ScalarFunction ScalarFunction::log1p() {
  ScalarFunction f;
  f.kind_ = Kind::kLog1p;
  f.finalize();
  return f;
}

ScalarFunction ScalarFunction::resolvent_frac(double lambda) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) {
    throw Error(ErrorKind::kSpecification, "resolvent: lambda must be positive");
  }
  ScalarFunction f;
  f.kind_ = Kind::kResolventFrac;
  f.p0_ = lambda;
  f.finalize();
  return f;
}

ScalarFunction ScalarFunction::inv_perturb() {
  ScalarFunction f;
  f.kind_ = Kind::kInvPerturb;
  f.finalize();
  return f;
}

ScalarFunction ScalarFunction::reciprocal() {
  ScalarFunction f;
  f.kind_ = Kind::kReciprocal;
  f.finalize();
  return f;
}

ScalarFunction ScalarFunction::one_plus_inv() {
  ScalarFunction f;
  f.kind_ = Kind::kOnePlusInv;
  f.finalize();
  return f;
}

ScalarFunction ScalarFunction::linear(double a, double b) {
  if (!std::isfinite(a) || !std::isfinite(b)) {
    throw Error(ErrorKind::kSpecification, "linear: coefficients must be finite");
  }
  ScalarFunction f;
  f.kind_ = Kind::kLinear;
  f.p0_ = a;
  f.p1_ = b;
  f.finalize();
  return f;
}

ScalarFunction ScalarFunction::square() {
  ScalarFunction f;
  f.kind_ = Kind::kSquare;
  f.finalize();
  return f;
}

ScalarFunction ScalarFunction::monotone_rep(MonotoneRep rep) {
  if (!(rep.b >= 0.0) || !std::isfinite(rep.a) || !std::isfinite(rep.b)) {
    throw Error(ErrorKind::kSpecification, "rep: need finite a and b >= 0");
  }
  validate_atoms(rep.atoms);
  ScalarFunction f;
  f.kind_ = Kind::kMonotoneRep;
  f.mono_ = std::make_shared<const MonotoneRep>(std::move(rep));
  f.finalize();
  return f;
}

ScalarFunction ScalarFunction::convex_rep(ConvexRep rep) {
  if (!(rep.c >= 0.0) || !std::isfinite(rep.a) || !std::isfinite(rep.b) || !std::isfinite(rep.c)) {
    throw Error(ErrorKind::kSpecification, "convrep: need finite a, b and c >= 0");
  }
  validate_atoms(rep.atoms);
  ScalarFunction f;
  f.kind_ = Kind::kConvexRep;
  f.conv_ = std::make_shared<const ConvexRep>(std::move(rep));
  f.finalize();
  return f;
}

ScalarFunction ScalarFunction::shift(const ScalarFunction& inner, double eps) {
  if (!std::isfinite(eps)) throw Error(ErrorKind::kSpecification, "shift: eps must be finite");
  ScalarFunction f;
  f.kind_ = Kind::kShift;
  f.p0_ = eps;
  f.inner_ = std::make_shared<const ScalarFunction>(inner);
  f.finalize();
  return f;
}

ScalarFunction ScalarFunction::log_of(const ScalarFunction& inner) {
  ScalarFunction f;
  f.kind_ = Kind::kLogOf;
  f.inner_ = std::make_shared<const ScalarFunction>(inner);
  f.finalize();
  return f;
}

const MonotoneRep* ScalarFunction::as_monotone_rep() const { return mono_.get(); }
const ConvexRep* ScalarFunction::as_convex_rep() const { return conv_.get(); }

void ScalarFunction::finalize() {
  FunctionFlags fl;
  switch (kind_) {
    case Kind::kPower:
      domain_ = Interval::nonnegative();
      fl.operator_monotone = true;
      fl.positive_valued = true;
      fl.affine = p0_ == 1.0;
      fl.operator_convex = fl.affine;
      fl.convex = fl.affine;
      break;
    case Kind::kLog:
      domain_ = Interval::positive();
      fl.operator_monotone = true;
      break;
    case Kind::kLog1p:
    case Kind::kResolventFrac:
    case Kind::kInvPerturb:
      domain_ = Interval::nonnegative();
      fl.operator_monotone = true;
      fl.positive_valued = true;
      break;
    case Kind::kReciprocal:
    case Kind::kOnePlusInv:
      domain_ = Interval::positive();
      fl.operator_convex = true;
      fl.convex = true;
      fl.log_convex = true;
      fl.positive_valued = true;
      break;
    case Kind::kLinear:
      domain_ = Interval::real_line();
      fl.affine = true;
      fl.constant = p1_ == 0.0;
      fl.operator_monotone = p1_ >= 0.0;
      fl.operator_convex = true;
      fl.convex = true;
      fl.log_convex = fl.constant && p0_ > 0.0;
      fl.positive_valued = p0_ >= 0.0 && p1_ >= 0.0 && (p0_ > 0.0 || p1_ > 0.0);
      break;
    case Kind::kSquare:
      domain_ = Interval::real_line();
      fl.operator_convex = true;
      fl.convex = true;
      fl.positive_valued = true;
      break;
    case Kind::kMonotoneRep: {
      domain_ = Interval::nonnegative();
      const MonotoneRep& r = *mono_;
      fl.operator_monotone = true;
      fl.affine = r.atoms.empty();
      fl.constant = fl.affine && r.b == 0.0;
      fl.operator_convex = fl.affine;
      fl.convex = fl.affine;
      fl.log_convex = fl.constant && r.a > 0.0;
      fl.positive_valued = r.a >= 0.0 && !(r.a == 0.0 && fl.constant);
      break;
    }
    case Kind::kConvexRep: {
      domain_ = Interval::nonnegative();
      const ConvexRep& r = *conv_;
      fl.operator_convex = true;
      fl.convex = true;
      fl.affine = r.c == 0.0 && r.atoms.empty();
      fl.constant = fl.affine && r.b == 0.0;
      fl.operator_monotone = fl.affine && r.b >= 0.0;
      fl.log_convex = fl.constant && r.a > 0.0;
      fl.positive_valued = r.a >= 0.0 && r.b >= 0.0 &&
                           (r.a > 0.0 || r.b > 0.0 || r.c > 0.0 || !r.atoms.empty());
      break;
    }
    case Kind::kShift: {
      const ScalarFunction& g = *inner_;
      const Interval& d = g.domain();
      domain_ = Interval{d.lo - p0_, d.hi - p0_, d.lo_open, d.hi_open};
      fl = g.flags();
      // x > 0 maps to x + eps > eps; an increasing inner function is then
      // positive as soon as it is nonnegative at eps.
      if (!fl.positive_valued && fl.operator_monotone && !fl.constant && d.contains(p0_) &&
          g(p0_) >= 0.0) {
        fl.positive_valued = true;
      }
      if (p0_ < 0.0 && fl.positive_valued && !(d.lo <= 0.0)) fl.positive_valued = false;
      break;
    }
    case Kind::kLogOf: {
      const ScalarFunction& g = *inner_;
      domain_ = g.domain();
      if (std::isfinite(domain_.lo) && !domain_.lo_open && !(g(domain_.lo) > 0.0)) {
        domain_.lo_open = true;
      }
      fl.operator_monotone = g.flags().operator_monotone && g.flags().positive_valued;
      fl.convex = g.flags().log_convex;
      fl.constant = g.flags().constant;
      fl.affine = fl.constant;
      break;
    }
  }
  flags_ = fl;
}

double ScalarFunction::operator()(double t) const {
  switch (kind_) {
    case Kind::kPower: return p0_ == 1.0 ? t : std::pow(t, p0_);
    case Kind::kLog: return std::log(t);
    case Kind::kLog1p: return std::log1p(t);
    case Kind::kResolventFrac: return (p0_ + 1.0) * t / (p0_ + t);
    case Kind::kInvPerturb: return t / (t + 1.0);
    case Kind::kReciprocal: return 1.0 / t;
    case Kind::kOnePlusInv: return 1.0 + 1.0 / t;
    case Kind::kLinear: return p0_ + p1_ * t;
    case Kind::kSquare: return t * t;
    case Kind::kMonotoneRep: {
      const MonotoneRep& r = *mono_;
      double v = r.a + r.b * t;
      for (const Atom& at : r.atoms) v += at.weight * (at.lambda + 1.0) * t / (at.lambda + t);
      return v;
    }
    case Kind::kConvexRep: {
      const ConvexRep& r = *conv_;
      double v = r.a + r.b * t + r.c * t * t;
      for (const Atom& at : r.atoms) v += at.weight * (at.lambda + 1.0) * t * t / (at.lambda + t);
      return v;
    }
    case Kind::kShift: return (*inner_)(t + p0_);
    case Kind::kLogOf: return std::log((*inner_)(t));
  }
  return std::numeric_limits<double>::quiet_NaN();
}

std::string ScalarFunction::to_string() const {
  switch (kind_) {
    case Kind::kPower: return "power:" + format_double(p0_);
    case Kind::kLog: return "log";
    case Kind::kLog1p: return "log1p";
    case Kind::kResolventFrac: return "resolvent:" + format_double(p0_);
    case Kind::kInvPerturb: return "inv_perturb";
    case Kind::kReciprocal: return "reciprocal";
    case Kind::kOnePlusInv: return "one_plus_inv";
    case Kind::kLinear: return "linear:" + format_double(p0_) + "," + format_double(p1_);
    case Kind::kSquare: return "square";
    case Kind::kMonotoneRep: {
      std::string s = "rep:[" + format_double(mono_->a) + "," + format_double(mono_->b);
      if (!mono_->atoms.empty()) s += ";" + atoms_text(mono_->atoms);
      return s + "]";
    }
    case Kind::kConvexRep: {
      std::string s = "convrep:[" + format_double(conv_->a) + "," + format_double(conv_->b) +
                      "," + format_double(conv_->c);
      if (!conv_->atoms.empty()) s += ";" + atoms_text(conv_->atoms);
      return s + "]";
    }
    case Kind::kShift: return "shift:" + inner_->to_string() + ":" + format_double(p0_);
    case Kind::kLogOf: return "logof:" + inner_->to_string();
  }
  return "?";
}

ScalarFunction ScalarFunction::parse(std::string_view raw) {
  const std::string text = strip(raw);
  const auto starts = [&](std::string_view p) { return text.rfind(p, 0) == 0; };
  if (text == "log") return log();
  if (text == "log1p") return log1p();
  if (text == "inv_perturb") return inv_perturb();
  if (text == "reciprocal") return reciprocal();
  if (text == "one_plus_inv") return one_plus_inv();
  if (text == "square") return square();
  if (starts("power:")) return power(parse_num(text.substr(6), text));
  if (starts("resolvent:")) return resolvent_frac(parse_num(text.substr(10), text));
  if (starts("linear:")) {
    const auto parts = split(std::string_view(text).substr(7), ',');
    if (parts.size() != 2) throw Error(ErrorKind::kParse, "function '" + text + "': linear:a,b");
    return linear(parse_num(parts[0], text), parse_num(parts[1], text));
  }
  if (starts("rep:") || starts("convrep:")) {
    const bool monotone = starts("rep:");
    const std::string body = text.substr(monotone ? 4 : 8);
    if (body.size() < 2 || body.front() != '[' || body.back() != ']') {
      throw Error(ErrorKind::kParse, "function '" + text + "': body must be [...]");
    }
    std::vector<double> coeffs;
    std::vector<Atom> atoms;
    parse_rep_body(std::string_view(body).substr(1, body.size() - 2), text, coeffs, atoms);
    if (monotone) {
      if (coeffs.size() != 2) throw Error(ErrorKind::kParse, "function '" + text + "': rep:[a,b;...]");
      return monotone_rep(MonotoneRep{coeffs[0], coeffs[1], std::move(atoms)});
    }
    if (coeffs.size() != 3) throw Error(ErrorKind::kParse, "function '" + text + "': convrep:[a,b,c;...]");
    return convex_rep(ConvexRep{coeffs[0], coeffs[1], coeffs[2], std::move(atoms)});
  }
  if (starts("shift:")) {
    const std::size_t last = text.rfind(':');
    if (last <= 6) throw Error(ErrorKind::kParse, "function '" + text + "': shift:<f>:<eps>");
    return shift(parse(std::string_view(text).substr(6, last - 6)),
                 parse_num(std::string_view(text).substr(last + 1), text));
  }
  if (starts("logof:")) return log_of(parse(std::string_view(text).substr(6)));
  throw Error(ErrorKind::kParse, "unknown function '" + text + "'");
}

double eval_scalar(const ScalarFunction& f, double t) {
  if (!f.domain().contains(t)) {
    std::ostringstream os;
    os << "eval_scalar: " << t << " outside domain " << f.domain().describe() << " of "
       << f.to_string();
    throw DomainError(t, os.str());
  }
  const double v = f(t);
  if (!std::isfinite(v)) {
    std::ostringstream os;
    os << "eval_scalar: " << f.to_string() << " is not finite at " << t;
    throw DomainError(t, os.str());
  }
  return v;
}

namespace {

// A (l I + A)^{-1} and A^2 (l I + A)^{-1}; l I + A is PD for PSD A.
ComplexMatrix resolvent_term(const HermitianMatrix& a, double lambda, bool squared) {
  const Eigen::Index n = a.dim();
  const ComplexMatrix shifted = a.matrix() + lambda * ComplexMatrix::Identity(n, n);
  Eigen::LLT<ComplexMatrix> llt(shifted);
  if (llt.info() != Eigen::Success) {
    throw Error(ErrorKind::kRegularity, "resolvent: lambda I + A is not positive definite");
  }
  const ComplexMatrix rhs = squared ? ComplexMatrix(a.matrix() * a.matrix()) : a.matrix();
  // (lI + A) commutes with A, so solving from the left gives the same product.
  return llt.solve(rhs);
}

void require_psd(const HermitianMatrix& a, const ToleranceConfig& tol, const char* what) {
  const Spectrum s = eig_hermitian(a);
  const double slack = tol.psd_tol * std::max(1.0, std::max(std::abs(s.min()), std::abs(s.max())));
  if (s.min() < -slack) {
    std::ostringstream os;
    os << what << ": eigenvalue " << s.min() << " outside [0, inf)";
    throw DomainError(s.min(), os.str());
  }
}

}  // namespace

HermitianMatrix eval_rep_resolvent(const MonotoneRep& rep, const HermitianMatrix& a,
                                   const ToleranceConfig& tol) {
  require_psd(a, tol, "eval_rep_resolvent");
  const Eigen::Index n = a.dim();
  ComplexMatrix out = rep.a * ComplexMatrix::Identity(n, n) + rep.b * a.matrix();
  for (const Atom& at : rep.atoms) {
    out += at.weight * (at.lambda + 1.0) * resolvent_term(a, at.lambda, false);
  }
  return HermitianMatrix::symmetrized(out);
}

HermitianMatrix eval_rep_resolvent(const ConvexRep& rep, const HermitianMatrix& a,
                                   const ToleranceConfig& tol) {
  require_psd(a, tol, "eval_rep_resolvent");
  const Eigen::Index n = a.dim();
  ComplexMatrix out = rep.a * ComplexMatrix::Identity(n, n) + rep.b * a.matrix() +
                      rep.c * (a.matrix() * a.matrix());
  for (const Atom& at : rep.atoms) {
    out += at.weight * (at.lambda + 1.0) * resolvent_term(a, at.lambda, true);
  }
  return HermitianMatrix::symmetrized(out);
}

HermitianMatrix eval_on_matrix(const ScalarFunction& f, const HermitianMatrix& a,
                               const ToleranceConfig& tol) {
  const HermitianMatrix spectral = apply_fn(a, [&f](double t) { return f(t); }, f.domain(), tol);
  std::optional<HermitianMatrix> resolvent;
  if (const MonotoneRep* r = f.as_monotone_rep()) resolvent = eval_rep_resolvent(*r, a, tol);
  if (const ConvexRep* r = f.as_convex_rep()) resolvent = eval_rep_resolvent(*r, a, tol);
  if (resolvent) {
    const double diff = (spectral.matrix() - resolvent->matrix()).norm() /
                        std::max(1.0, spectral.matrix().norm());
    if (diff > 1e-10) {
      std::ostringstream os;
      os << "eval_on_matrix: spectral and resolvent routes disagree by " << diff << " for "
         << f.to_string();
      throw Error(ErrorKind::kNumerical, os.str());
    }
  }
  return spectral;
}

HermitianMatrix loewner_matrix(const ScalarFunction& f, std::span<const double> points) {
  const auto n = static_cast<Eigen::Index>(points.size());
  if (n == 0) throw Error(ErrorKind::kInput, "loewner_matrix: no points");
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) {
      if (points[i] == points[j]) {
        throw Error(ErrorKind::kInput, "loewner_matrix: coincident points");
      }
    }
  }
  ComplexMatrix l(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double x = points[i];
    const double h = 1e-6 * std::max(1.0, std::abs(x));
    if (!f.domain().contains(x - h) || !f.domain().contains(x + h)) {
      std::ostringstream os;
      os << "loewner_matrix: point " << x << " is not interior to " << f.domain().describe();
      throw DomainError(x, os.str());
    }
    l(i, i) = (f(x + h) - f(x - h)) / (2.0 * h);
    for (Eigen::Index j = 0; j < i; ++j) {
      const double q = (f(x) - f(points[j])) / (x - points[j]);
      l(i, j) = q;
      l(j, i) = q;
    }
  }
  return HermitianMatrix::symmetrized(l);
}

bool loewner_psd(const ScalarFunction& f, std::span<const double> points) {
  const HermitianMatrix l = loewner_matrix(f, points);
  const Spectrum s = eig_hermitian(l);
  const double scale = std::max(1.0, std::max(std::abs(s.min()), std::abs(s.max())));
  return s.min() >= -kLoewnerTol * scale;
}

namespace {

// Spectral window for sampled matrices: a positive band starting just inside
// the domain so both A and the perturbed matrices stay in it.
std::pair<double, double> sample_window(const ScalarFunction& f) {
  const Interval& d = f.domain();
  const double base = std::isfinite(d.lo) ? std::max(d.lo, 0.0) : 0.0;
  double lo = base + 0.05;
  double hi = base + 5.0;
  if (std::isfinite(d.hi)) hi = std::min(hi, d.hi - 0.05);
  if (!(lo < hi)) throw Error(ErrorKind::kSpecification, "sampling: domain too narrow");
  return {lo, hi};
}

SamplerConfig window_config(int n, double lo, double hi) {
  SamplerConfig cfg;
  cfg.n = n;
  cfg.partition = BlockPartition::full(n);
  cfg.spectrum_lo = lo;
  cfg.spectrum_hi = hi;
  cfg.rank = n;
  return cfg;
}

double norm2(const HermitianMatrix& m) { return spectral_norm(m); }

}  // namespace

SampleReport sample_monotone(const ScalarFunction& f, int n, int trials, std::uint64_t seed,
                             const ToleranceConfig& tol) {
  if (trials < 1 || n < 1) throw Error(ErrorKind::kInput, "sample_monotone: need trials >= 1, n >= 1");
  const auto [lo, hi] = sample_window(f);
  const SamplerConfig cfg = window_config(n, lo, hi);
  SampleReport rep;
  rep.trials = trials;
  rep.flagged = f.flags().operator_monotone;
  rep.seed = seed;
  for (int t = 0; t < trials; ++t) {
    Rng rng = Rng::for_trial(seed, hash_id("sample_monotone"), static_cast<std::uint64_t>(t));
    const HermitianMatrix a = random_pd(cfg, rng);
    const int rank = rng.uniform_int(1, n);
    const ComplexMatrix g = ginibre(n, rank, rng);
    const double size = rng.uniform(0.01, 2.0) / std::max(1.0, g.squaredNorm() / n);
    const HermitianMatrix b = a + HermitianMatrix::symmetrized(size * (g * g.adjoint()));
    if (std::isfinite(f.domain().hi) && lambda_max(b) >= f.domain().hi) continue;
    const HermitianMatrix fa = eval_on_matrix(f, a, tol);
    const HermitianMatrix fb = eval_on_matrix(f, b, tol);
    const double scale = std::max({1.0, norm2(fa), norm2(fb)});
    const double gap = lambda_min(fb - fa) / scale;
    rep.min_gap = std::min(rep.min_gap, gap);
    if (gap < -tol.psd_tol) {
      if (rep.violations == 0) {
        rep.witness_trial = t;
        rep.witness_a = a.matrix();
        rep.witness_b = b.matrix();
      }
      ++rep.violations;
    }
  }
  return rep;
}

SampleReport sample_convex(const ScalarFunction& f, int n, int trials, std::uint64_t seed,
                           const ToleranceConfig& tol) {
  if (trials < 1 || n < 1) throw Error(ErrorKind::kInput, "sample_convex: need trials >= 1, n >= 1");
  const auto [lo, hi] = sample_window(f);
  const SamplerConfig cfg = window_config(n, lo, hi);
  SampleReport rep;
  rep.trials = trials;
  rep.flagged = f.flags().operator_convex;
  rep.seed = seed;
  for (int t = 0; t < trials; ++t) {
    Rng rng = Rng::for_trial(seed, hash_id("sample_convex"), static_cast<std::uint64_t>(t));
    const HermitianMatrix a = random_pd(cfg, rng);
    const HermitianMatrix b = random_pd(cfg, rng);
    const double mix = rng.uniform(0.0, 1.0);
    const HermitianMatrix m = a * mix + b * (1.0 - mix);
    const HermitianMatrix fa = eval_on_matrix(f, a, tol);
    const HermitianMatrix fb = eval_on_matrix(f, b, tol);
    const HermitianMatrix fm = eval_on_matrix(f, m, tol);
    const double scale = std::max({1.0, norm2(fa), norm2(fb), norm2(fm)});
    const double gap = lambda_min(fa * mix + fb * (1.0 - mix) - fm) / scale;
    rep.min_gap = std::min(rep.min_gap, gap);
    if (gap < -tol.psd_tol) {
      if (rep.violations == 0) {
        rep.witness_trial = t;
        rep.witness_a = a.matrix();
        rep.witness_b = b.matrix();
        rep.witness_mix = mix;
      }
      ++rep.violations;
    }
  }
  return rep;
}

}  // namespace fkineq
