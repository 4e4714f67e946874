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

#include "fkineq/matrix_io.hpp"
#include "fkineq/sampling.hpp"
#include "fkineq/subalgebra.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

namespace fkineq {
namespace {

using testing_util::diag;
using testing_util::herm;
using testing_util::real_matrix;

TEST(BlockPartitionTest, Constructors) {
  EXPECT_EQ(BlockPartition::diagonal(3).sizes(), (std::vector<int>{1, 1, 1}));
  EXPECT_EQ(BlockPartition::full(3).sizes(), (std::vector<int>{3}));
  EXPECT_EQ(BlockPartition::halves(5).sizes(), (std::vector<int>{3, 2}));
  EXPECT_TRUE(BlockPartition::halves(1).is_full());
  EXPECT_TRUE(BlockPartition::diagonal(4).is_diagonal());
  EXPECT_THROW(BlockPartition::from_sizes({2, 0}), Error);
  EXPECT_THROW(BlockPartition::from_sizes({}), Error);
}

TEST(BlockPartitionTest, Parse) {
  EXPECT_EQ(BlockPartition::parse("diag", 3), BlockPartition::diagonal(3));
  EXPECT_EQ(BlockPartition::parse("full", 3), BlockPartition::full(3));
  EXPECT_EQ(BlockPartition::parse("halves", 4), BlockPartition::from_sizes({2, 2}));
  const BlockPartition p = BlockPartition::parse("2,2,3", 7);
  EXPECT_EQ(p.sizes(), (std::vector<int>{2, 2, 3}));
  EXPECT_EQ(p.offsets(), (std::vector<int>{0, 2, 4}));
  EXPECT_EQ(p.block_of(3), 1);
  EXPECT_EQ(p.block_of(6), 2);
  EXPECT_EQ(p.to_string(), "2,2,3");
  try {
    BlockPartition::parse("2,x", 4);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kParse);
  }
  try {
    BlockPartition::parse("2,1", 4);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kSpecification);
  }
}

TEST(PinchTest, Examples) {
  const ComplexMatrix a = real_matrix({{1, 2}, {3, 4}});
  EXPECT_TRUE((pinch(a, BlockPartition::diagonal(2)).array() ==
               diag({1, 4}).matrix().array()).all());
  EXPECT_TRUE((pinch(a, BlockPartition::full(2)).array() == a.array()).all());
  EXPECT_THROW(pinch(a, BlockPartition::diagonal(3)), Error);
}

TEST(PinchTest, BlockDiagonalAndTrace) {
  Rng rng(1);
  const ComplexMatrix a = ginibre(4, 4, rng);
  const ComplexMatrix p = pinch(a, BlockPartition::halves(4));
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      const bool same_block = (i < 2) == (j < 2);
      EXPECT_EQ(p(i, j), same_block ? a(i, j) : Complex(0.0));
    }
  }
  EXPECT_LE(std::abs(normalized_trace(p) - normalized_trace(a)), 1e-14);
}

TEST(PinchTest, IdempotentAndTraceExact) {
  Rng rng(2);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 2 + trial % 7;
    const BlockPartition part = trial % 2 ? BlockPartition::halves(n) : BlockPartition::diagonal(n);
    const ComplexMatrix a = ginibre(n, n, rng);
    const ComplexMatrix p = pinch(a, part);
    EXPECT_TRUE((pinch(p, part).array() == p.array()).all());
    EXPECT_EQ(normalized_trace(p), normalized_trace(a));
  }
}

TEST(PinchTest, PreservesRegularity) {
  Rng rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 + trial % 7;
    const SamplerConfig cfg = testing_util::sampler(n, BlockPartition::halves(n), 0.01, 10.0);
    const HermitianMatrix a = random_pd(cfg, rng);
    const double eps = lambda_min(a);
    EXPECT_GE(lambda_min(pinch(a, cfg.partition)), eps - 1e-10);
  }
}

TEST(MembershipTest, Examples) {
  const BlockPartition p = BlockPartition::halves(4);
  Rng rng(4);
  const HermitianMatrix m = random_member(testing_util::sampler(4, p), rng);
  EXPECT_TRUE(is_member(m.matrix(), p));
  EXPECT_EQ(membership_residual(m.matrix(), p), 0.0);
  ComplexMatrix off = m.matrix();
  off(0, 3) = 1.0;
  EXPECT_FALSE(is_member(off, p));
  const ComplexMatrix g = ginibre(4, 4, rng);
  EXPECT_FALSE(is_member(g, p));
  EXPECT_TRUE(is_member(pinch(g, p), p));
}

TEST(ApplyMapTest, Examples) {
  const HermitianMatrix d13 = diag({1, 3});
  EXPECT_LE((apply_map(d13, PositiveMapSpec::trace_map()).matrix() - diag({2, 2}).matrix()).norm(),
            1e-15);
  const PositiveMapSpec id_mix =
      PositiveMapSpec::unitary_mixing({{ComplexMatrix::Identity(2, 2), 1.0}});
  EXPECT_LE((apply_map(d13, id_mix).matrix() - d13.matrix()).norm(), 1e-15);
  const ComplexMatrix swap = real_matrix({{0, 1}, {1, 0}});
  const PositiveMapSpec half_swap =
      PositiveMapSpec::unitary_mixing({{ComplexMatrix::Identity(2, 2), 0.5}, {swap, 0.5}});
  // (1/2) diag(1,3) + (1/2) diag(3,1).
  EXPECT_LE((apply_map(d13, half_swap).matrix() - diag({2, 2}).matrix()).norm(), 1e-15);
  const PositiveMapSpec pin = PositiveMapSpec::pinching(BlockPartition::diagonal(2));
  EXPECT_LE((apply_map(herm({{1, 5}, {5, 2}}), pin).matrix() - diag({1, 2}).matrix()).norm(), 0.0);
}

TEST(ApplyMapTest, RejectsBadMixing) {
  const ComplexMatrix id = ComplexMatrix::Identity(2, 2);
  const auto expect_spec_error = [](auto&& make) {
    try {
      make();
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::kSpecification);
    }
  };
  expect_spec_error([&] { PositiveMapSpec::unitary_mixing({{id, 0.5}, {id, 0.4}}); });
  expect_spec_error([&] { PositiveMapSpec::unitary_mixing({{id, 1.5}, {id, -0.5}}); });
  expect_spec_error([&] { PositiveMapSpec::unitary_mixing({{id * 1.001, 1.0}}); });
  expect_spec_error([&] { PositiveMapSpec::unitary_mixing({}); });
  EXPECT_NO_THROW(PositiveMapSpec::unitary_mixing({{id, 0.5 + 1e-13}, {id, 0.5}}));
}

TEST(ApplyMapTest, UnitalTracePreservingPositive) {
  Rng rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 2 + trial % 5;
    std::vector<std::pair<ComplexMatrix, double>> terms;
    for (int k = 0; k < 3; ++k) terms.emplace_back(haar_unitary(n, rng), 1.0 / 3.0);
    const std::vector<PositiveMapSpec> maps = {
        PositiveMapSpec::pinching(BlockPartition::halves(n)), PositiveMapSpec::trace_map(),
        PositiveMapSpec::unitary_mixing(terms)};
    SamplerConfig cfg = testing_util::sampler(n, BlockPartition::full(n));
    cfg.rank = trial % (n + 1);
    const HermitianMatrix x = random_psd_singular(cfg, rng);
    for (const PositiveMapSpec& m : maps) {
      EXPECT_LE((apply_map(HermitianMatrix::identity(n), m).matrix() -
                 ComplexMatrix::Identity(n, n)).norm(),
                1e-12);
      const HermitianMatrix y = apply_map(x, m);
      EXPECT_LE(std::abs(normalized_trace(y.matrix()) - normalized_trace(x.matrix())),
                1e-12 * std::max(1.0, x.matrix().norm()));
      EXPECT_GE(oracle::lambda_min(y.matrix()), -1e-10 * std::max(1.0, x.matrix().norm()));
    }
  }
}

TEST(MixingFileTest, RoundTrip) {
  Rng rng(8);
  std::vector<std::pair<ComplexMatrix, double>> terms = {{haar_unitary(3, rng), 0.25},
                                                         {haar_unitary(3, rng), 0.75}};
  const PositiveMapSpec m = PositiveMapSpec::unitary_mixing(terms);
  const auto& mix = std::get<UnitaryMixing>(m.kind());
  const PositiveMapSpec back = parse_mixing(format_mixing(mix));
  const auto& mix2 = std::get<UnitaryMixing>(back.kind());
  ASSERT_EQ(mix2.unitaries.size(), 2u);
  EXPECT_EQ(mix2.weights, mix.weights);
  EXPECT_TRUE((mix2.unitaries[1].array() == mix.unitaries[1].array()).all());
  EXPECT_EQ(back.dim(), 3);
  EXPECT_THROW(parse_mixing("2\n1\n1 1\n1,0\n"), Error);
}

TEST(ExpectationAxiomsTest, FullAlgebraPasses) {
  const AxiomReport r = check_expectation_axioms(BlockPartition::full(3), 10, 1);
  EXPECT_TRUE(r.passed) << r.witness;
  EXPECT_EQ(r.idempotence, 0.0);
}

TEST(ExpectationAxiomsTest, DiagonalBimoduleEntrywise) {
  // For S1 = diag(d1, d2): (S1 R)_{ii} = d_i r_ii, so Phi(S1 R) = S1 Phi(R).
  const ComplexMatrix r = real_matrix({{1, 2}, {3, 4}});
  const ComplexMatrix s1 = diag({5, 7}).matrix();
  const BlockPartition p = BlockPartition::diagonal(2);
  const ComplexMatrix lhs = pinch(s1 * r, p);
  EXPECT_EQ(lhs(0, 0), Complex(5.0));
  EXPECT_EQ(lhs(1, 1), Complex(28.0));
  EXPECT_TRUE((lhs.array() == (s1 * pinch(r, p)).array()).all());
  const AxiomReport rep = check_expectation_axioms(p, 20, 2);
  EXPECT_TRUE(rep.passed) << rep.witness;
}

TEST(ExpectationAxiomsTest, RandomTrials) {
  const AxiomReport r = check_expectation_axioms(BlockPartition::from_sizes({2, 2}), 50, 3);
  EXPECT_TRUE(r.passed) << r.witness;
  EXPECT_EQ(r.trials, 50);
  EXPECT_LE(r.bimodule, 1e-10);
  EXPECT_LE(r.linearity, 1e-10);
  EXPECT_LE(r.unitality, 1e-10);
  EXPECT_LE(r.trace, 1e-10);
  EXPECT_GE(r.positivity_min, -1e-10);
}

TEST(TwoPositivityTest, BlockDiagonalAndFixedPoint) {
  Rng rng(9);
  const BlockPartition p = BlockPartition::from_sizes({2, 1});
  const SamplerConfig cfg = testing_util::sampler(3, p);
  const HermitianMatrix a = random_pd(cfg, rng);
  const HermitianMatrix b = random_pd(cfg, rng);
  ComplexMatrix x = ComplexMatrix::Zero(6, 6);
  x.topLeftCorner(3, 3) = a.matrix();
  x.bottomRightCorner(3, 3) = b.matrix();
  EXPECT_GE(oracle::lambda_min(pinch_2x2_blocks(x, p)), -1e-10);

  const HermitianMatrix m = random_member(cfg, rng);
  x.topLeftCorner(3, 3) = m.matrix();
  x.topRightCorner(3, 3) = ComplexMatrix::Identity(3, 3);
  x.bottomLeftCorner(3, 3) = ComplexMatrix::Identity(3, 3);
  x.bottomRightCorner(3, 3) = oracle::inverse(m.matrix());
  const ComplexMatrix y = pinch_2x2_blocks(x, p);
  EXPECT_TRUE((y.array() == x.array()).all());
}

TEST(TwoPositivityTest, RandomTrials) {
  const TwoPositivityReport r = check_two_positivity(BlockPartition::from_sizes({2, 1}), 100, 5);
  EXPECT_TRUE(r.passed) << r.witness;
  EXPECT_GE(r.min_eigenvalue, -1e-10);
}

}  // namespace
}  // namespace fkineq
