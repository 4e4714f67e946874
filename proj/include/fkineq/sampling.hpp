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

// Seeded instance generation. Every trial draws from its own stream derived
// from (base seed, stream id, trial index), so trials can run in any order
// or in parallel and still reproduce bit for bit.

#ifndef FKINEQ_SAMPLING_HPP
#define FKINEQ_SAMPLING_HPP

#include <cstdint>
#include <random>
#include <string_view>

#include "fkineq/linalg.hpp"
#include "fkineq/subalgebra.hpp"

namespace fkineq {

std::uint64_t splitmix64(std::uint64_t x);
/// FNV-1a; stable across platforms, used to turn ineq ids into stream ids.
std::uint64_t hash_id(std::string_view s);
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream, std::uint64_t index);

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(splitmix64(seed)) {}
  static Rng for_trial(std::uint64_t base, std::uint64_t stream, std::uint64_t index) {
    return Rng(derive_seed(base, stream, index));
  }

  double uniform(double lo, double hi);
  double normal();
  /// Standard complex Gaussian, E|z|^2 = 1.
  Complex complex_normal();
  int uniform_int(int lo, int hi);  // inclusive
  std::uint64_t next_u64() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

struct SamplerConfig {
  int n = 4;
  BlockPartition partition = BlockPartition::halves(4);
  double spectrum_lo = 0.1;
  double spectrum_hi = 10.0;
  /// Rank for random_psd_singular; ignored elsewhere.
  int rank = 3;
  std::uint64_t seed = 0;
  int trials = 100;

  /// Throws kSpecification unless 1 <= n <= 32, 0 < lo <= hi, 0 <= rank <= n
  /// and partition.total() == n.
  void validate() const;
};

/// i.i.d. complex Gaussian entries.
ComplexMatrix ginibre(Eigen::Index rows, Eigen::Index cols, Rng& rng);

/// QR of a Ginibre matrix with the phases of diag(R) divided out, so the
/// result is Haar distributed.
ComplexMatrix haar_unitary(int n, Rng& rng);
ComplexMatrix haar_unitary(int n, std::uint64_t seed);

/// Spectrum drawn log-uniformly from [lo, hi], sorted ascending.
RealVector log_uniform_spectrum(int n, double lo, double hi, Rng& rng);

/// U diag(s) U* with Haar U and log-uniform s in [lo, hi].
HermitianMatrix random_pd(const SamplerConfig& cfg, Rng& rng);
/// Haar-rotated diag(s_1, ..., s_rank, 0, ..., 0); the zero eigenvalues are
/// set exactly before rotation.
HermitianMatrix random_psd_singular(const SamplerConfig& cfg, Rng& rng);
/// Random Hermitian (GUE-like) matrix scaled to unit spectral radius order.
HermitianMatrix random_hermitian(int n, Rng& rng);
/// Block diagonal PD matrix, each block drawn like random_pd.
HermitianMatrix random_member(const SamplerConfig& cfg, Rng& rng);
/// PD matrix whose relative distance to its pinching is at least
/// `min_distance`; the spectrum stays inside [lo, hi]. Throws
/// kSpecification when that cannot be met (full partition, lo == hi).
HermitianMatrix random_nonmember(const SamplerConfig& cfg, double min_distance, Rng& rng);

}  // namespace fkineq

#endif  // FKINEQ_SAMPLING_HPP
