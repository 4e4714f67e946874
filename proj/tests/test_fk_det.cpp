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

#include <cmath>

#include <gtest/gtest.h>

#include "fkineq/fk_det.hpp"
#include "fkineq/sampling.hpp"
#include "fkineq/subalgebra.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

namespace fkineq {
namespace {

using testing_util::diag;
using testing_util::herm;
using testing_util::rel_err;

TEST(FkDetTest, Examples) {
  EXPECT_NEAR(fk_det(ComplexMatrix::Identity(5, 5)).value, 1.0, 1e-15);
  EXPECT_NEAR(fk_det(diag({1, 4}).matrix()).value, 2.0, 1e-15);
  // |det| = 3 by cofactors.
  EXPECT_NEAR(fk_det(herm({{2, 1}, {1, 2}}).matrix()).value, std::sqrt(3.0), 1e-15);
  const FKValue z = fk_det(diag({1, 0}).matrix());
  EXPECT_TRUE(z.is_zero());
  EXPECT_EQ(z.log_value, -std::numeric_limits<double>::infinity());
  EXPECT_TRUE(fk_det(ComplexMatrix::Zero(3, 3)).is_zero());
}

TEST(FkDetTest, ValueAndLogAgree) {
  Rng rng(6);
  for (int trial = 0; trial < 20; ++trial) {
    const FKValue v = fk_det(ginibre(5, 5, rng));
    EXPECT_NEAR(v.value, std::exp(v.log_value), 1e-15 * v.value);
  }
}

TEST(FkDetTest, RejectsNonSquare) {
  ComplexMatrix m(2, 3);
  m.setOnes();
  EXPECT_THROW(fk_det(m), Error);
}

TEST(FkDetTest, MatchesLuOracle) {
  Rng rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + trial % 7;
    const ComplexMatrix a = ginibre(n, n, rng);
    EXPECT_LE(rel_err(fk_det(a).value, oracle::fk_det(a)), 1e-9);
  }
}

TEST(FkDetRatioTest, Examples) {
  EXPECT_NEAR(fk_det_ratio(diag({1, 2}), HermitianMatrix::zero(2)), 1.0, 1e-15);
  EXPECT_NEAR(fk_det_ratio(HermitianMatrix::identity(3), HermitianMatrix::identity(3)), 2.0,
              1e-14);
  EXPECT_NEAR(fk_det_ratio(diag({1, 2}), diag({3, 4})), std::sqrt(12.0), 1e-14);
  try {
    fk_det_ratio(diag({1, 0}), diag({1, 1}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kRegularity);
  }
}

TEST(FkDetRatioTest, MatchesQuotient) {
  Rng rng(30);
  const SamplerConfig cfg = testing_util::sampler(6, BlockPartition::full(6));
  for (int trial = 0; trial < 50; ++trial) {
    const HermitianMatrix a = random_pd(cfg, rng);
    const HermitianMatrix b = random_pd(cfg, rng);
    const double q = fk_det((a + b).matrix()).value / fk_det(a.matrix()).value;
    EXPECT_LE(rel_err(fk_det_ratio(a, b), q), 1e-12);
  }
}

class FkDetPropertyTest : public ::testing::Test {
 protected:
  Rng rng_{2024};
};

TEST_F(FkDetPropertyTest, Multiplicative) {
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + trial % 12;
    const ComplexMatrix a = ginibre(n, n, rng_);
    const ComplexMatrix b = ginibre(n, n, rng_);
    const double da = fk_det(a).value;
    const double db = fk_det(b).value;
    EXPECT_LE(std::abs(fk_det(oracle::multiply(a, b)).value - da * db), 1e-9 * da * db);
  }
}

TEST_F(FkDetPropertyTest, Inverse) {
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + trial % 12;
    const ComplexMatrix a = ginibre(n, n, rng_);
    EXPECT_LE(std::abs(fk_det(oracle::inverse(a)).value * fk_det(a).value - 1.0), 1e-9);
  }
}

TEST_F(FkDetPropertyTest, MonotoneOnPositives) {
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + trial % 8;
    SamplerConfig cfg = testing_util::sampler(n, BlockPartition::full(n));
    const HermitianMatrix a = random_pd(cfg, rng_);
    cfg.rank = trial % (n + 1);
    const HermitianMatrix p = random_psd_singular(cfg, rng_);
    const double da = fk_det(a.matrix()).value;
    const double dap = fk_det((a + p).matrix()).value;
    EXPECT_LE(da, dap + 1e-9);
    if (cfg.rank > 0) EXPECT_GT(dap - da, 1e-9 * dap);
  }
}

TEST_F(FkDetPropertyTest, ContinuousFromAbove) {
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 2 + trial % 6;
    SamplerConfig cfg = testing_util::sampler(n, BlockPartition::full(n));
    cfg.rank = n - 1 - trial % 2;
    const HermitianMatrix a = random_psd_singular(cfg, rng_);
    const double base = fk_det(a.matrix()).value;
    EXPECT_EQ(base, 0.0);
    const std::vector<double> lam = oracle::eigenvalues(a.matrix());
    double prev = std::numeric_limits<double>::infinity();
    for (double eps : {1e-1, 1e-2, 1e-3, 1e-4, 1e-5, 1e-6}) {
      const double d = std::abs(
          fk_det((a + HermitianMatrix::identity(n) * eps).matrix()).value - base);
      EXPECT_LT(d, prev);
      // prod (lambda_i + eps)^(1/n), with the zero eigenvalues set exactly.
      double log_want = 0.0;
      for (int i = 0; i < n; ++i) {
        const double l = i < n - cfg.rank ? 0.0 : lam[static_cast<std::size_t>(i)];
        log_want += std::log(l + eps) / n;
      }
      EXPECT_LE(rel_err(d, std::exp(log_want)), 1e-6);
      prev = d;
    }
  }
}

TEST_F(FkDetPropertyTest, BlockFormula) {
  for (int trial = 0; trial < 50; ++trial) {
    const int m = 1 + trial % 6;
    const ComplexMatrix a1 = ginibre(m, m, rng_);
    const ComplexMatrix a2 = ginibre(m, m, rng_);
    ComplexMatrix d = ComplexMatrix::Zero(2 * m, 2 * m);
    d.topLeftCorner(m, m) = a1;
    d.bottomRightCorner(m, m) = a2;
    const double want = std::sqrt(fk_det(a1).value * fk_det(a2).value);
    EXPECT_LE(rel_err(fk_det(d).value, want), 1e-9);
  }
}

TEST_F(FkDetPropertyTest, BoundedByTrace) {
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + trial % 8;
    SamplerConfig cfg = testing_util::sampler(n, BlockPartition::full(n));
    cfg.rank = trial % (n + 1);
    const HermitianMatrix a = random_psd_singular(cfg, rng_);
    const double delta = fk_det(a.matrix()).value;
    const double tr = normalized_trace(a.matrix()).real();
    EXPECT_LE(delta, tr + 1e-9);
    const bool scalar = is_member(a.matrix(), BlockPartition::diagonal(n)) &&
                        (a.matrix() - HermitianMatrix::identity(n).matrix() * tr).norm() <=
                            1e-8 * std::max(1.0, a.matrix().norm());
    const bool equal = std::abs(tr - delta) <= 1e-9 * std::max(1.0, tr);
    EXPECT_EQ(scalar, equal);
  }
  const double c = 2.5;
  EXPECT_NEAR(fk_det((HermitianMatrix::identity(4) * c).matrix()).value, c, 1e-14);
}

TEST_F(FkDetPropertyTest, Sylvester) {
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + trial % 10;
    const ComplexMatrix a = ginibre(n, n, rng_);
    const ComplexMatrix b = ginibre(n, n, rng_);
    const ComplexMatrix id = ComplexMatrix::Identity(n, n);
    const double lhs = fk_det(id + oracle::multiply(a, b)).value;
    const double rhs = fk_det(id + oracle::multiply(b, a)).value;
    EXPECT_LE(rel_err(lhs, rhs), 1e-9);
  }
}

}  // namespace
}  // namespace fkineq
