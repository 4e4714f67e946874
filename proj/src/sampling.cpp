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

#include "fkineq/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace fkineq {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t hash_id(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream, std::uint64_t index) {
  return splitmix64(splitmix64(base ^ splitmix64(stream)) + index);
}

double Rng::uniform(double lo, double hi) {
  // 53 random bits -> [0, 1); avoids implementation-defined distributions.
  const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * u;
}

double Rng::normal() {
  // Box-Muller on our own uniforms keeps streams identical across standard
  // library implementations.
  double u1 = 0.0;
  do {
    u1 = uniform(0.0, 1.0);
  } while (u1 <= 0.0);
  const double u2 = uniform(0.0, 1.0);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

Complex Rng::complex_normal() {
  const double re = normal();
  const double im = normal();
  return Complex(re, im) * M_SQRT1_2;
}

int Rng::uniform_int(int lo, int hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<int>(engine_() % span);
}

void SamplerConfig::validate() const {
  std::ostringstream os;
  if (n < 1 || n > 32) os << "n must lie in [1, 32]; ";
  if (!(spectrum_lo > 0.0) || !(spectrum_lo <= spectrum_hi) || !std::isfinite(spectrum_hi)) {
    os << "spectrum must satisfy 0 < lo <= hi < inf; ";
  }
  if (rank < 0 || rank > n) os << "rank must lie in [0, n]; ";
  if (partition.total() != n) os << "partition total must equal n; ";
  if (trials < 0) os << "trials must be >= 0; ";
  const std::string msg = os.str();
  if (!msg.empty()) throw Error(ErrorKind::kSpecification, "SamplerConfig: " + msg);
}

ComplexMatrix ginibre(Eigen::Index rows, Eigen::Index cols, Rng& rng) {
  ComplexMatrix g(rows, cols);
  for (Eigen::Index j = 0; j < cols; ++j) {
    for (Eigen::Index i = 0; i < rows; ++i) g(i, j) = rng.complex_normal();
  }
  return g;
}

ComplexMatrix haar_unitary(int n, Rng& rng) {
  if (n < 1) throw Error(ErrorKind::kInput, "haar_unitary: n must be >= 1");
  const ComplexMatrix z = ginibre(n, n, rng);
  Eigen::HouseholderQR<ComplexMatrix> qr(z);
  ComplexMatrix q = qr.householderQ();
  const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < n; ++j) {
    const double mag = std::abs(r(j, j));
    const Complex phase = mag > 0.0 ? r(j, j) / mag : Complex(1.0, 0.0);
    q.col(j) *= phase;
  }
  return q;
}

ComplexMatrix haar_unitary(int n, std::uint64_t seed) {
  Rng rng(seed);
  return haar_unitary(n, rng);
}

RealVector log_uniform_spectrum(int n, double lo, double hi, Rng& rng) {
  RealVector s(n);
  const double a = std::log(lo);
  const double b = std::log(hi);
  for (int i = 0; i < n; ++i) s(i) = lo == hi ? lo : std::exp(rng.uniform(a, b));
  std::sort(s.begin(), s.end());
  return s;
}

namespace {

HermitianMatrix rotate(const RealVector& s, const ComplexMatrix& u) {
  return HermitianMatrix::symmetrized(u * s.cast<Complex>().asDiagonal() * u.adjoint());
}

}  // namespace

HermitianMatrix random_pd(const SamplerConfig& cfg, Rng& rng) {
  cfg.validate();
  const RealVector s = log_uniform_spectrum(cfg.n, cfg.spectrum_lo, cfg.spectrum_hi, rng);
  return rotate(s, haar_unitary(cfg.n, rng));
}

HermitianMatrix random_psd_singular(const SamplerConfig& cfg, Rng& rng) {
  cfg.validate();
  RealVector s = RealVector::Zero(cfg.n);
  if (cfg.rank > 0) {
    s.tail(cfg.rank) = log_uniform_spectrum(cfg.rank, cfg.spectrum_lo, cfg.spectrum_hi, rng);
  }
  return rotate(s, haar_unitary(cfg.n, rng));
}

HermitianMatrix random_hermitian(int n, Rng& rng) {
  const ComplexMatrix g = ginibre(n, n, rng);
  return HermitianMatrix::symmetrized(g / std::sqrt(2.0 * n));
}

HermitianMatrix random_member(const SamplerConfig& cfg, Rng& rng) {
  cfg.validate();
  ComplexMatrix m = ComplexMatrix::Zero(cfg.n, cfg.n);
  const auto offs = cfg.partition.offsets();
  for (std::size_t b = 0; b < offs.size(); ++b) {
    const int k = cfg.partition.sizes()[b];
    const RealVector s = log_uniform_spectrum(k, cfg.spectrum_lo, cfg.spectrum_hi, rng);
    const ComplexMatrix u = haar_unitary(k, rng);
    m.block(offs[b], offs[b], k, k) = u * s.cast<Complex>().asDiagonal() * u.adjoint();
  }
  // Off-block entries are exact zeros.
  return HermitianMatrix::symmetrized(m);
}

HermitianMatrix random_nonmember(const SamplerConfig& cfg, double min_distance, Rng& rng) {
  cfg.validate();
  if (cfg.partition.is_full()) {
    throw Error(ErrorKind::kSpecification,
                "random_nonmember: the full partition has no non-members");
  }
  constexpr int kAttempts = 1000;
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    RealVector s = log_uniform_spectrum(cfg.n, cfg.spectrum_lo, cfg.spectrum_hi, rng);
    if (attempt >= 100) {
      // Pin the extremes so the spread, and with it the achievable
      // off-block mass, is as large as the spectral range allows.
      s(0) = cfg.spectrum_lo;
      s(cfg.n - 1) = cfg.spectrum_hi;
    }
    const HermitianMatrix a = rotate(s, haar_unitary(cfg.n, rng));
    if (membership_residual(a.matrix(), cfg.partition) >= min_distance) return a;
  }
  std::ostringstream os;
  os << "random_nonmember: could not reach relative distance " << min_distance
     << " with spectrum [" << cfg.spectrum_lo << ", " << cfg.spectrum_hi << "]";
  throw Error(ErrorKind::kSpecification, os.str());
}

}  // namespace fkineq
