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

#include "fkineq/subalgebra.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>

#include "fkineq/matrix_io.hpp"
#include "fkineq/sampling.hpp"

namespace fkineq {

namespace {

void require_dim(const ComplexMatrix& a, const BlockPartition& p, const char* what) {
  if (a.rows() != a.cols() || a.rows() != p.total()) {
    std::ostringstream os;
    os << what << ": matrix is " << a.rows() << "x" << a.cols() << " but partition "
       << p.to_string() << " has total " << p.total();
    throw Error(ErrorKind::kShape, os.str());
  }
}

std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

}  // namespace

BlockPartition BlockPartition::from_sizes(std::vector<int> sizes) {
  if (sizes.empty()) throw Error(ErrorKind::kSpecification, "BlockPartition: no blocks");
  for (int s : sizes) {
    if (s < 1) throw Error(ErrorKind::kSpecification, "BlockPartition: block sizes must be >= 1");
  }
  BlockPartition p;
  p.total_ = std::accumulate(sizes.begin(), sizes.end(), 0);
  p.sizes_ = std::move(sizes);
  return p;
}

BlockPartition BlockPartition::diagonal(int n) {
  if (n < 1) throw Error(ErrorKind::kSpecification, "BlockPartition: n must be >= 1");
  return from_sizes(std::vector<int>(static_cast<std::size_t>(n), 1));
}

BlockPartition BlockPartition::full(int n) {
  if (n < 1) throw Error(ErrorKind::kSpecification, "BlockPartition: n must be >= 1");
  return from_sizes({n});
}

BlockPartition BlockPartition::halves(int n) {
  if (n < 1) throw Error(ErrorKind::kSpecification, "BlockPartition: n must be >= 1");
  if (n == 1) return full(1);
  return from_sizes({(n + 1) / 2, n / 2});
}

BlockPartition BlockPartition::parse(std::string_view text, int n) {
  const std::string t = trim(text);
  if (t == "diag") return diagonal(n);
  if (t == "full") return full(n);
  if (t == "halves") return halves(n);
  std::vector<int> sizes;
  std::size_t start = 0;
  while (start <= t.size()) {
    const std::size_t comma = t.find(',', start);
    const std::string tok = trim(std::string_view(t).substr(
        start, comma == std::string::npos ? std::string::npos : comma - start));
    int v = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size()) {
      throw Error(ErrorKind::kParse, "partition: bad block size '" + tok + "' in '" + t + "'");
    }
    sizes.push_back(v);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  BlockPartition p = from_sizes(std::move(sizes));
  if (p.total() != n) {
    throw Error(ErrorKind::kSpecification, "partition '" + t + "' sums to " +
                                               std::to_string(p.total()) + ", expected " +
                                               std::to_string(n));
  }
  return p;
}

std::vector<int> BlockPartition::offsets() const {
  std::vector<int> out(sizes_.size());
  int acc = 0;
  for (std::size_t i = 0; i < sizes_.size(); ++i) {
    out[i] = acc;
    acc += sizes_[i];
  }
  return out;
}

int BlockPartition::block_of(int i) const {
  int acc = 0;
  for (std::size_t b = 0; b < sizes_.size(); ++b) {
    acc += sizes_[b];
    if (i < acc) return static_cast<int>(b);
  }
  throw Error(ErrorKind::kShape, "block_of: index out of range");
}

std::string BlockPartition::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < sizes_.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(sizes_[i]);
  }
  return out;
}

ComplexMatrix pinch(const ComplexMatrix& a, const BlockPartition& p) {
  require_dim(a, p, "pinch");
  ComplexMatrix out = ComplexMatrix::Zero(a.rows(), a.cols());
  const auto offs = p.offsets();
  for (std::size_t b = 0; b < offs.size(); ++b) {
    const int o = offs[b];
    const int s = p.sizes()[b];
    out.block(o, o, s, s) = a.block(o, o, s, s);
  }
  return out;
}

HermitianMatrix pinch(const HermitianMatrix& a, const BlockPartition& p) {
  return HermitianMatrix::symmetrized(pinch(a.matrix(), p));
}

double membership_residual(const ComplexMatrix& a, const BlockPartition& p) {
  return (a - pinch(a, p)).norm() / std::max(1.0, a.norm());
}

bool is_member(const ComplexMatrix& a, const BlockPartition& p, const ToleranceConfig& tol) {
  return membership_residual(a, p) <= tol.membership_tol;
}

PositiveMapSpec PositiveMapSpec::pinching(BlockPartition p) {
  return PositiveMapSpec(Pinching{std::move(p)});
}

PositiveMapSpec PositiveMapSpec::unitary_mixing(
    std::vector<std::pair<ComplexMatrix, double>> terms) {
  if (terms.empty()) throw Error(ErrorKind::kSpecification, "unitary_mixing: no terms");
  const Eigen::Index n = terms.front().first.rows();
  double total = 0.0;
  UnitaryMixing mix;
  for (auto& [u, w] : terms) {
    if (u.rows() != n || u.cols() != n) {
      throw Error(ErrorKind::kSpecification, "unitary_mixing: unitaries must share one square shape");
    }
    if (!(w >= 0.0) || !std::isfinite(w)) {
      throw Error(ErrorKind::kSpecification, "unitary_mixing: weights must be nonnegative");
    }
    const double r = (u.adjoint() * u - ComplexMatrix::Identity(n, n)).norm();
    if (r > 1e-10) {
      std::ostringstream os;
      os << "unitary_mixing: ||U*U - I||_F = " << r << " exceeds 1e-10";
      throw Error(ErrorKind::kSpecification, os.str());
    }
    total += w;
    mix.unitaries.push_back(std::move(u));
    mix.weights.push_back(w);
  }
  if (std::abs(total - 1.0) > 1e-12) {
    std::ostringstream os;
    os.precision(17);
    os << "unitary_mixing: weights sum to " << total << ", expected 1";
    throw Error(ErrorKind::kSpecification, os.str());
  }
  for (double& w : mix.weights) w /= total;
  return PositiveMapSpec(std::move(mix));
}

PositiveMapSpec PositiveMapSpec::trace_map() { return PositiveMapSpec(TraceMap{}); }

std::string PositiveMapSpec::describe() const {
  return std::visit(
      [](const auto& k) -> std::string {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, Pinching>) {
          return "pinch:" + k.partition.to_string();
        } else if constexpr (std::is_same_v<K, UnitaryMixing>) {
          return "mix:" + std::to_string(k.unitaries.size());
        } else {
          return "trace";
        }
      },
      kind_);
}

Eigen::Index PositiveMapSpec::dim() const {
  return std::visit(
      [](const auto& k) -> Eigen::Index {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, Pinching>) {
          return k.partition.total();
        } else if constexpr (std::is_same_v<K, UnitaryMixing>) {
          return k.unitaries.front().rows();
        } else {
          return 0;
        }
      },
      kind_);
}

ComplexMatrix apply_map(const ComplexMatrix& a, const PositiveMapSpec& m) {
  if (a.rows() != a.cols()) throw Error(ErrorKind::kShape, "apply_map: square matrix required");
  if (m.dim() != 0 && m.dim() != a.rows()) {
    throw Error(ErrorKind::kShape, "apply_map: map dimension " + std::to_string(m.dim()) +
                                       " does not match matrix dimension " +
                                       std::to_string(a.rows()));
  }
  return std::visit(
      [&a](const auto& k) -> ComplexMatrix {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, Pinching>) {
          return pinch(a, k.partition);
        } else if constexpr (std::is_same_v<K, UnitaryMixing>) {
          ComplexMatrix out = ComplexMatrix::Zero(a.rows(), a.cols());
          for (std::size_t i = 0; i < k.unitaries.size(); ++i) {
            out += k.weights[i] * (k.unitaries[i] * a * k.unitaries[i].adjoint());
          }
          return out;
        } else {
          return normalized_trace(a) * ComplexMatrix::Identity(a.rows(), a.cols());
        }
      },
      m.kind());
}

HermitianMatrix apply_map(const HermitianMatrix& a, const PositiveMapSpec& m) {
  return HermitianMatrix::symmetrized(apply_map(a.matrix(), m));
}

PositiveMapSpec parse_mixing(std::string_view text) {
  std::vector<std::string> lines;
  std::istringstream in{std::string(text)};
  for (std::string line; std::getline(in, line);) {
    if (!trim(line).empty()) lines.push_back(line);
  }
  std::size_t pos = 0;
  const auto next = [&]() -> const std::string& {
    if (pos >= lines.size()) throw Error(ErrorKind::kParse, "mixing: unexpected end of input");
    return lines[pos++];
  };
  const std::string head = trim(next());
  int k = 0;
  {
    const auto [ptr, ec] = std::from_chars(head.data(), head.data() + head.size(), k);
    if (ec != std::errc() || ptr != head.data() + head.size() || k < 1) {
      throw Error(ErrorKind::kParse, "mixing: first line must be the term count");
    }
  }
  std::vector<std::pair<ComplexMatrix, double>> terms;
  for (int t = 0; t < k; ++t) {
    const std::string wtxt = trim(next());
    double w = 0.0;
    const auto [ptr, ec] = std::from_chars(wtxt.data(), wtxt.data() + wtxt.size(), w);
    if (ec != std::errc() || ptr != wtxt.data() + wtxt.size()) {
      throw Error(ErrorKind::kParse, "mixing: bad weight '" + wtxt + "'");
    }
    const std::string header = next();
    std::istringstream hs(header);
    long rows = 0;
    hs >> rows;
    if (rows <= 0) throw Error(ErrorKind::kParse, "mixing: bad matrix header '" + header + "'");
    std::string block = header + "\n";
    for (long r = 0; r < rows; ++r) block += next() + "\n";
    terms.emplace_back(parse_matrix(block), w);
  }
  if (pos != lines.size()) throw Error(ErrorKind::kParse, "mixing: trailing content");
  return PositiveMapSpec::unitary_mixing(std::move(terms));
}

PositiveMapSpec read_mixing_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kParse, "cannot open mixing file " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_mixing(ss.str());
}

std::string format_mixing(const UnitaryMixing& mix) {
  std::string out = std::to_string(mix.unitaries.size()) + "\n";
  for (std::size_t i = 0; i < mix.unitaries.size(); ++i) {
    out += format_double(mix.weights[i]) + "\n";
    out += format_matrix(mix.unitaries[i]);
  }
  return out;
}

namespace {

ComplexMatrix random_block_element(const BlockPartition& p, Rng& rng) {
  ComplexMatrix s = ComplexMatrix::Zero(p.total(), p.total());
  const auto offs = p.offsets();
  for (std::size_t b = 0; b < offs.size(); ++b) {
    const int k = p.sizes()[b];
    s.block(offs[b], offs[b], k, k) = ginibre(k, k, rng);
  }
  return s;
}

double rel(double num, double scale) { return num / std::max(1.0, scale); }

}  // namespace

AxiomReport check_expectation_axioms(const BlockPartition& p, int trials, std::uint64_t seed,
                                     const ToleranceConfig& tol) {
  if (trials < 1) throw Error(ErrorKind::kInput, "check_expectation_axioms: trials must be >= 1");
  const int n = p.total();
  const ComplexMatrix id = ComplexMatrix::Identity(n, n);
  AxiomReport rep;
  rep.trials = trials;

  const auto fail = [&](const std::string& axiom, int trial, const ComplexMatrix& r,
                        const ComplexMatrix& s1, const ComplexMatrix& s2) {
    if (!rep.passed) return;
    rep.passed = false;
    rep.witness = axiom + " violated at trial " + std::to_string(trial) + " (seed " +
                  std::to_string(seed) + ")";
    rep.witness_r = r;
    rep.witness_s1 = s1;
    rep.witness_s2 = s2;
  };

  rep.unitality = (pinch(id, p) - id).norm() / std::sqrt(static_cast<double>(n));
  if (rep.unitality > 1e-12) fail("unitality", 0, id, id, id);

  for (int t = 0; t < trials; ++t) {
    Rng rng = Rng::for_trial(seed, hash_id("axioms"), static_cast<std::uint64_t>(t));
    const ComplexMatrix r1 = ginibre(n, n, rng);
    const ComplexMatrix r2 = ginibre(n, n, rng);
    const Complex alpha = rng.complex_normal();
    const Complex beta = rng.complex_normal();
    const ComplexMatrix s1 = random_block_element(p, rng);
    const ComplexMatrix s2 = random_block_element(p, rng);

    const ComplexMatrix lin_lhs = pinch(ComplexMatrix(alpha * r1 + beta * r2), p);
    const ComplexMatrix lin_rhs = alpha * pinch(r1, p) + beta * pinch(r2, p);
    const double lin = rel((lin_lhs - lin_rhs).norm(), (std::abs(alpha) * r1.norm() +
                                                        std::abs(beta) * r2.norm()));
    rep.linearity = std::max(rep.linearity, lin);
    if (lin > 1e-12) fail("linearity", t, r1, r2, id);

    const ComplexMatrix g = ginibre(n, n, rng);
    const HermitianMatrix x = HermitianMatrix::symmetrized(g * g.adjoint());
    const Spectrum px = eig_hermitian(pinch(x, p));
    const double pos = px.min() / std::max(1.0, spectral_norm(x));
    rep.positivity_min = std::min(rep.positivity_min, pos);
    if (pos < -tol.psd_tol) fail("positivity", t, x.matrix(), id, id);

    const ComplexMatrix bim_lhs = pinch(ComplexMatrix(s1 * r1 * s2), p);
    const ComplexMatrix bim_rhs = s1 * pinch(r1, p) * s2;
    const double bim = rel((bim_lhs - bim_rhs).norm(), s1.norm() * r1.norm() * s2.norm());
    rep.bimodule = std::max(rep.bimodule, bim);
    if (bim > 1e-10) fail("bimodule", t, r1, s1, s2);

    const double tr = rel(std::abs(normalized_trace(pinch(r1, p)) - normalized_trace(r1)),
                          r1.norm());
    rep.trace = std::max(rep.trace, tr);
    if (tr > 1e-12) fail("trace", t, r1, id, id);

    const ComplexMatrix once = pinch(r1, p);
    const double idem = (pinch(once, p) - once).norm();
    rep.idempotence = std::max(rep.idempotence, idem);
    if (idem != 0.0) fail("idempotence", t, r1, id, id);
  }
  return rep;
}

ComplexMatrix pinch_2x2_blocks(const ComplexMatrix& x, const BlockPartition& p) {
  const int n = p.total();
  if (x.rows() != 2 * n || x.cols() != 2 * n) {
    throw Error(ErrorKind::kShape, "pinch_2x2_blocks: expected a 2n x 2n matrix");
  }
  ComplexMatrix out(2 * n, 2 * n);
  for (int bi = 0; bi < 2; ++bi) {
    for (int bj = 0; bj < 2; ++bj) {
      out.block(bi * n, bj * n, n, n) = pinch(ComplexMatrix(x.block(bi * n, bj * n, n, n)), p);
    }
  }
  return out;
}

TwoPositivityReport check_two_positivity(const BlockPartition& p, int trials, std::uint64_t seed,
                                         const ToleranceConfig& tol) {
  if (trials < 1) throw Error(ErrorKind::kInput, "check_two_positivity: trials must be >= 1");
  const int n = p.total();
  TwoPositivityReport rep;
  rep.trials = trials;
  rep.min_eigenvalue = std::numeric_limits<double>::infinity();
  for (int t = 0; t < trials; ++t) {
    Rng rng = Rng::for_trial(seed, hash_id("two-positivity"), static_cast<std::uint64_t>(t));
    // Mix full-rank and rank-deficient X so boundary cases are exercised.
    const int rank = rng.uniform_int(1, 2 * n);
    const ComplexMatrix g = ginibre(2 * n, rank, rng);
    const HermitianMatrix x = HermitianMatrix::symmetrized(g * g.adjoint());
    const HermitianMatrix y = HermitianMatrix::symmetrized(pinch_2x2_blocks(x.matrix(), p));
    const double m = lambda_min(y) / std::max(1.0, spectral_norm(x));
    if (m < rep.min_eigenvalue) rep.min_eigenvalue = m;
    if (m < -tol.psd_tol && rep.passed) {
      rep.passed = false;
      rep.witness = "(Phi x I2)(X) not PSD at trial " + std::to_string(t) + " (seed " +
                    std::to_string(seed) + ")";
      rep.witness_x = x.matrix();
    }
  }
  return rep;
}

}  // namespace fkineq
