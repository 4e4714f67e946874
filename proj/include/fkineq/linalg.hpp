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

// Dense complex linear algebra on M_n(C): Hermitian eigendecomposition,
// functional calculus, positivity tests, normalized trace and Schur
// complements. Built on Eigen; sizes are small (n <= 32).

#ifndef FKINEQ_LINALG_HPP
#define FKINEQ_LINALG_HPP

#include <complex>
#include <functional>
#include <limits>
#include <span>
#include <string>

#include <Eigen/Dense>

#include "fkineq/error.hpp"
#include "fkineq/tolerance.hpp"

namespace fkineq {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;

/// Square complex matrix with Hermitian symmetry. Construction checks the
/// symmetry and stores the exactly symmetrized matrix (A + A*) / 2, which is
/// bitwise equal to the input when the input is exactly Hermitian.
class HermitianMatrix {
 public:
  HermitianMatrix() = default;

  /// Throws kHermiticity when ||A - A*||_F > tol * max(1, ||A||_F),
  /// kShape when not square and kInput on non-finite entries.
  static HermitianMatrix from(const ComplexMatrix& m,
                              double hermiticity_tol = ToleranceConfig{}.hermiticity_tol);

  /// Symmetrizes without checking. For results that are Hermitian by
  /// construction (sums, congruences, functional calculus).
  static HermitianMatrix symmetrized(const ComplexMatrix& m);

  static HermitianMatrix identity(Eigen::Index n);
  static HermitianMatrix zero(Eigen::Index n);
  static HermitianMatrix diagonal(const RealVector& d);

  Eigen::Index dim() const { return m_.rows(); }
  const ComplexMatrix& matrix() const { return m_; }
  Complex operator()(Eigen::Index i, Eigen::Index j) const { return m_(i, j); }

  HermitianMatrix operator+(const HermitianMatrix& o) const;
  HermitianMatrix operator-(const HermitianMatrix& o) const;
  HermitianMatrix operator*(double s) const;

 private:
  explicit HermitianMatrix(ComplexMatrix m) : m_(std::move(m)) {}
  ComplexMatrix m_;
};

/// Eigenvalues ascending; eigenvectors are the columns of a unitary matrix.
struct Spectrum {
  RealVector values;
  ComplexMatrix vectors;

  double min() const { return values(0); }
  double max() const { return values(values.size() - 1); }
  /// U diag(values) U*.
  ComplexMatrix reconstruct() const;
};

/// Real interval with optionally open ends; infinite ends are open.
struct Interval {
  double lo = -std::numeric_limits<double>::infinity();
  double hi = std::numeric_limits<double>::infinity();
  bool lo_open = true;
  bool hi_open = true;

  static Interval real_line() { return {}; }
  static Interval nonnegative() { return {0.0, std::numeric_limits<double>::infinity(), false, true}; }
  static Interval positive() { return {0.0, std::numeric_limits<double>::infinity(), true, true}; }
  static Interval closed(double a, double b) { return {a, b, false, false}; }

  bool contains(double x) const;
  std::string describe() const;
};

double frobenius_norm(const ComplexMatrix& a);
double hermiticity_residual(const ComplexMatrix& a);
bool all_finite(const ComplexMatrix& a);

/// Throws kNumerical if the eigensolver does not converge.
Spectrum eig_hermitian(const HermitianMatrix& a);

/// U diag(f(lambda_i)) U*. Eigenvalues within psd_tol * max(1, ||A||_2) of a
/// closed endpoint are clamped onto it; anything else outside the domain
/// raises DomainError carrying the eigenvalue.
HermitianMatrix apply_fn(const HermitianMatrix& a, const std::function<double(double)>& f,
                         const Interval& domain, const ToleranceConfig& tol = {});
HermitianMatrix apply_fn(const Spectrum& spec, const std::function<double(double)>& f,
                         const Interval& domain, const ToleranceConfig& tol = {});

/// lambda_min >= -psd_tol * max(1, ||A||_2).
bool is_psd(const HermitianMatrix& a, const ToleranceConfig& tol = {});
/// lambda_min >= psd_tol * max(1, ||A||_2), a strictly positive threshold.
bool is_pd(const HermitianMatrix& a, const ToleranceConfig& tol = {});

double lambda_min(const HermitianMatrix& a);
double lambda_max(const HermitianMatrix& a);
double spectral_norm(const HermitianMatrix& a);
/// lambda_max / lambda_min for PD input, +inf otherwise.
double condition_number(const HermitianMatrix& a);

/// (1/n) * sum of diagonal entries. Throws kShape for non-square input.
Complex normalized_trace(const ComplexMatrix& a);

/// Inverse of a PD matrix via its eigendecomposition. Throws kRegularity when
/// not PD and kIllConditioned above kIllConditionedCap.
HermitianMatrix inverse_pd(const HermitianMatrix& a, const ToleranceConfig& tol = {});

/// Square root of a PSD matrix. Eigenvalues at or below
/// singular_tol * lambda_max are treated as exact zeros.
HermitianMatrix sqrt_psd(const HermitianMatrix& a, const ToleranceConfig& tol = {});

/// C - B* A^{-1} B for P = [[A, B], [B*, C]] split after row/column `split`.
/// Throws kRegularity when the leading block is not PD.
HermitianMatrix schur_complement(const HermitianMatrix& p, Eigen::Index split,
                                 const ToleranceConfig& tol = {});
/// Even-dimension form, split at dim / 2.
HermitianMatrix schur_complement(const HermitianMatrix& p, const ToleranceConfig& tol = {});

}  // namespace fkineq

#endif  // FKINEQ_LINALG_HPP
