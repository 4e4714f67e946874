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

#include "fkineq/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace fkineq {

namespace {

double norm_scale(const Spectrum& s) {
  return std::max(1.0, std::max(std::abs(s.min()), std::abs(s.max())));
}

void require_square(const ComplexMatrix& a, const char* what) {
  if (a.rows() != a.cols() || a.rows() == 0) {
    std::ostringstream os;
    os << what << ": expected a non-empty square matrix, got " << a.rows() << "x" << a.cols();
    throw Error(ErrorKind::kShape, os.str());
  }
}

}  // namespace

HermitianMatrix HermitianMatrix::from(const ComplexMatrix& m, double hermiticity_tol) {
  require_square(m, "HermitianMatrix");
  if (!all_finite(m)) throw Error(ErrorKind::kInput, "HermitianMatrix: non-finite entry");
  const double r = hermiticity_residual(m);
  if (r > hermiticity_tol) {
    std::ostringstream os;
    os << "HermitianMatrix: relative hermiticity residual " << r << " exceeds " << hermiticity_tol;
    throw Error(ErrorKind::kHermiticity, os.str());
  }
  return symmetrized(m);
}

HermitianMatrix HermitianMatrix::symmetrized(const ComplexMatrix& m) {
  require_square(m, "HermitianMatrix");
  ComplexMatrix s = (m + m.adjoint()) * 0.5;
  return HermitianMatrix(std::move(s));
}

HermitianMatrix HermitianMatrix::identity(Eigen::Index n) {
  return HermitianMatrix(ComplexMatrix::Identity(n, n));
}

HermitianMatrix HermitianMatrix::zero(Eigen::Index n) {
  return HermitianMatrix(ComplexMatrix::Zero(n, n));
}

HermitianMatrix HermitianMatrix::diagonal(const RealVector& d) {
  ComplexMatrix m = ComplexMatrix::Zero(d.size(), d.size());
  for (Eigen::Index i = 0; i < d.size(); ++i) m(i, i) = d(i);
  return HermitianMatrix(std::move(m));
}

HermitianMatrix HermitianMatrix::operator+(const HermitianMatrix& o) const {
  if (o.dim() != dim()) throw Error(ErrorKind::kShape, "HermitianMatrix +: dimension mismatch");
  return HermitianMatrix(m_ + o.m_);
}

HermitianMatrix HermitianMatrix::operator-(const HermitianMatrix& o) const {
  if (o.dim() != dim()) throw Error(ErrorKind::kShape, "HermitianMatrix -: dimension mismatch");
  return HermitianMatrix(m_ - o.m_);
}

HermitianMatrix HermitianMatrix::operator*(double s) const { return HermitianMatrix(m_ * s); }

ComplexMatrix Spectrum::reconstruct() const {
  return vectors * values.cast<Complex>().asDiagonal() * vectors.adjoint();
}

bool Interval::contains(double x) const {
  const bool above = lo_open ? x > lo : x >= lo;
  const bool below = hi_open ? x < hi : x <= hi;
  return above && below;
}

std::string Interval::describe() const {
  std::ostringstream os;
  os << (lo_open ? '(' : '[') << lo << ", " << hi << (hi_open ? ')' : ']');
  return os.str();
}

double frobenius_norm(const ComplexMatrix& a) { return a.norm(); }

double hermiticity_residual(const ComplexMatrix& a) {
  if (a.rows() != a.cols()) return std::numeric_limits<double>::infinity();
  return (a - a.adjoint()).norm() / std::max(1.0, a.norm());
}

bool all_finite(const ComplexMatrix& a) {
  for (Eigen::Index j = 0; j < a.cols(); ++j) {
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      if (!std::isfinite(a(i, j).real()) || !std::isfinite(a(i, j).imag())) return false;
    }
  }
  return true;
}

Spectrum eig_hermitian(const HermitianMatrix& a) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(a.matrix());
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorKind::kNumerical, "eig_hermitian: eigensolver did not converge");
  }
  return Spectrum{solver.eigenvalues(), solver.eigenvectors()};
}

HermitianMatrix apply_fn(const Spectrum& spec, const std::function<double(double)>& f,
                         const Interval& domain, const ToleranceConfig& tol) {
  const double slack = tol.psd_tol * norm_scale(spec);
  RealVector mapped(spec.values.size());
  for (Eigen::Index i = 0; i < spec.values.size(); ++i) {
    double x = spec.values(i);
    if (!domain.contains(x)) {
      if (!domain.lo_open && x < domain.lo && x >= domain.lo - slack) {
        x = domain.lo;
      } else if (!domain.hi_open && x > domain.hi && x <= domain.hi + slack) {
        x = domain.hi;
      } else {
        std::ostringstream os;
        os << "apply_fn: eigenvalue " << x << " outside domain " << domain.describe();
        throw DomainError(x, os.str());
      }
    }
    mapped(i) = f(x);
    if (!std::isfinite(mapped(i))) {
      std::ostringstream os;
      os << "apply_fn: function value at eigenvalue " << x << " is not finite";
      throw DomainError(x, os.str());
    }
  }
  return HermitianMatrix::symmetrized(spec.vectors * mapped.cast<Complex>().asDiagonal() *
                                      spec.vectors.adjoint());
}

HermitianMatrix apply_fn(const HermitianMatrix& a, const std::function<double(double)>& f,
                         const Interval& domain, const ToleranceConfig& tol) {
  return apply_fn(eig_hermitian(a), f, domain, tol);
}

bool is_psd(const HermitianMatrix& a, const ToleranceConfig& tol) {
  const Spectrum s = eig_hermitian(a);
  return s.min() >= -tol.psd_tol * norm_scale(s);
}

bool is_pd(const HermitianMatrix& a, const ToleranceConfig& tol) {
  const Spectrum s = eig_hermitian(a);
  return s.min() >= tol.psd_tol * norm_scale(s) && s.min() > 0.0;
}

double lambda_min(const HermitianMatrix& a) { return eig_hermitian(a).min(); }
double lambda_max(const HermitianMatrix& a) { return eig_hermitian(a).max(); }

double spectral_norm(const HermitianMatrix& a) {
  const Spectrum s = eig_hermitian(a);
  return std::max(std::abs(s.min()), std::abs(s.max()));
}

double condition_number(const HermitianMatrix& a) {
  const Spectrum s = eig_hermitian(a);
  if (s.min() <= 0.0) return std::numeric_limits<double>::infinity();
  return s.max() / s.min();
}

Complex normalized_trace(const ComplexMatrix& a) {
  require_square(a, "normalized_trace");
  return a.trace() / static_cast<double>(a.rows());
}

HermitianMatrix inverse_pd(const HermitianMatrix& a, const ToleranceConfig& tol) {
  const Spectrum s = eig_hermitian(a);
  if (!(s.min() > 0.0) || s.min() < tol.psd_tol * norm_scale(s)) {
    std::ostringstream os;
    os << "inverse_pd: matrix is not positive definite (lambda_min = " << s.min() << ")";
    throw Error(ErrorKind::kRegularity, os.str());
  }
  if (s.max() / s.min() > kIllConditionedCap) {
    std::ostringstream os;
    os << "inverse_pd: condition number " << s.max() / s.min() << " exceeds cap";
    throw Error(ErrorKind::kIllConditioned, os.str());
  }
  return apply_fn(s, [](double x) { return 1.0 / x; }, Interval::positive(), tol);
}

HermitianMatrix sqrt_psd(const HermitianMatrix& a, const ToleranceConfig& tol) {
  Spectrum s = eig_hermitian(a);
  const double cutoff = tol.singular_tol * std::max(0.0, s.max());
  for (Eigen::Index i = 0; i < s.values.size(); ++i) {
    if (std::abs(s.values(i)) <= cutoff) s.values(i) = 0.0;
  }
  return apply_fn(s, [](double x) { return std::sqrt(x); }, Interval::nonnegative(), tol);
}

HermitianMatrix schur_complement(const HermitianMatrix& p, Eigen::Index split,
                                 const ToleranceConfig& tol) {
  const Eigen::Index n = p.dim();
  if (split <= 0 || split >= n) {
    throw Error(ErrorKind::kShape, "schur_complement: split must satisfy 0 < split < dim");
  }
  const Eigen::Index rest = n - split;
  const HermitianMatrix a = HermitianMatrix::symmetrized(p.matrix().topLeftCorner(split, split));
  const ComplexMatrix b = p.matrix().topRightCorner(split, rest);
  const ComplexMatrix c = p.matrix().bottomRightCorner(rest, rest);
  if (!is_pd(a, tol)) {
    throw Error(ErrorKind::kRegularity, "schur_complement: leading block is not positive definite");
  }
  Eigen::LLT<ComplexMatrix> llt(a.matrix());
  if (llt.info() != Eigen::Success) {
    throw Error(ErrorKind::kRegularity, "schur_complement: Cholesky of leading block failed");
  }
  const ComplexMatrix ainv_b = llt.solve(b);
  return HermitianMatrix::symmetrized(c - b.adjoint() * ainv_b);
}

HermitianMatrix schur_complement(const HermitianMatrix& p, const ToleranceConfig& tol) {
  if (p.dim() % 2 != 0) {
    throw Error(ErrorKind::kShape, "schur_complement: even dimension required");
  }
  return schur_complement(p, p.dim() / 2, tol);
}

}  // namespace fkineq
