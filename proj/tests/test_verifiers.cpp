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
#include <numbers>

#include <gtest/gtest.h>

#include "fkineq/registry.hpp"
#include "fkineq/sampling.hpp"
#include "fkineq/verifiers.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

namespace fkineq {
namespace {

using testing_util::diag;
using testing_util::herm;

const BlockPartition kDiag2 = BlockPartition::diagonal(2);
const BlockPartition kHalves4 = BlockPartition::halves(4);

HermitianMatrix pd_nonmember(int n, const BlockPartition& p, Rng& rng) {
  return random_nonmember(testing_util::sampler(n, p, 1.0, 10.0), 0.1, rng);
}

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error";
  return ErrorKind::kInput;
}

TEST(HadamardTest, Examples) {
  const InequalityReport d = verify_hadamard(diag({2, 5}));
  EXPECT_NEAR(d.gap, 0.0, 1e-14);
  EXPECT_TRUE(d.holds);
  EXPECT_TRUE(d.equality_detected);
  EXPECT_EQ(d.equality_expected, std::optional<bool>(true));

  const InequalityReport s = verify_hadamard(herm({{2, 1}, {1, 2}}));
  EXPECT_NEAR(s.lhs, std::log(3.0), 1e-14);
  EXPECT_NEAR(s.rhs, std::log(4.0), 1e-14);
  EXPECT_TRUE(s.holds);
  EXPECT_FALSE(s.equality_detected);
  EXPECT_EQ(s.equality_expected, std::optional<bool>(false));

  const InequalityReport near = verify_hadamard(herm({{1, 0.999}, {0.999, 1}}));
  EXPECT_TRUE(near.holds);
  EXPECT_NEAR(near.condition, 1999.0, 1e-6);
  EXPECT_NEAR(near.lhs, std::log(1 - 0.999 * 0.999), 1e-12);
}

TEST(HadamardTest, Preconditions) {
  EXPECT_EQ(kind_of([] { verify_hadamard(diag({1, 0})); }), ErrorKind::kPrecondition);
  EXPECT_EQ(kind_of([] { verify_hadamard(diag({1, -1})); }), ErrorKind::kPrecondition);
}

TEST(HadamardTest, AgreesWithLuOracle) {
  Rng rng(1);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 + trial % 6;
    const HermitianMatrix a = random_pd(testing_util::sampler(n, BlockPartition::full(n)), rng);
    const InequalityReport r = verify_hadamard(a);
    EXPECT_NEAR(r.lhs, std::log(std::abs(oracle::lu_det(a.matrix()))), 1e-10);
    double diag_log = 0.0;
    for (int i = 0; i < n; ++i) diag_log += std::log(a(i, i).real());
    EXPECT_NEAR(r.rhs, diag_log, 1e-12);
  }
}

TEST(FischerTest, Examples) {
  Rng rng(2);
  const HermitianMatrix m = random_member(testing_util::sampler(4, kHalves4), rng);
  const InequalityReport eq = verify_fischer(m, kHalves4);
  EXPECT_TRUE(eq.equality_detected);
  EXPECT_EQ(eq.equality_expected, std::optional<bool>(true));

  const HermitianMatrix a = pd_nonmember(4, kHalves4, rng);
  const InequalityReport r = verify_fischer(a, kHalves4);
  const double lhs = std::log(std::abs(oracle::lu_det(a.matrix())));
  const double rhs = std::log(std::abs(oracle::lu_det(a.matrix().topLeftCorner(2, 2)))) +
                     std::log(std::abs(oracle::lu_det(a.matrix().bottomRightCorner(2, 2))));
  EXPECT_NEAR(r.gap, rhs - lhs, 1e-10);
  EXPECT_GT(r.gap, 1e-6);
  EXPECT_FALSE(r.equality_detected);
  EXPECT_EQ(kind_of([&] { verify_fischer(a, BlockPartition::halves(3)); }), ErrorKind::kShape);
}

TEST(FischerTest, DiagonalPartitionIsHadamard) {
  Rng rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 2 + trial % 5;
    const HermitianMatrix a = random_pd(testing_util::sampler(n, BlockPartition::full(n)), rng);
    const InequalityReport f = verify_fischer(a, BlockPartition::diagonal(n));
    const InequalityReport h = verify_hadamard(a);
    EXPECT_NEAR(f.gap, h.gap, 1e-12);
    EXPECT_EQ(f.equality_detected, h.equality_detected);
  }
}

TEST(ArvesonTest, Examples) {
  Rng rng(4);
  const HermitianMatrix m = random_member(testing_util::sampler(4, kHalves4), rng);
  const ArvesonReports eq = verify_arveson(m, kHalves4);
  ASSERT_TRUE(eq.left);
  EXPECT_TRUE(eq.left->equality_detected);
  EXPECT_TRUE(eq.right.equality_detected);

  const ArvesonReports sing = verify_arveson(diag({1, 0}), kDiag2);
  EXPECT_FALSE(sing.left);
  EXPECT_TRUE(sing.right.holds);
  EXPECT_EQ(sing.right.lhs, 0.0);
  EXPECT_TRUE(std::isinf(*sing.right.log_lhs));

  const HermitianMatrix a = pd_nonmember(4, kHalves4, rng);
  const ArvesonReports r = verify_arveson(a, kHalves4);
  ASSERT_TRUE(r.left);
  const ComplexMatrix inv = oracle::inverse(a.matrix());
  ComplexMatrix pinv = ComplexMatrix::Zero(4, 4);
  pinv.topLeftCorner(2, 2) = inv.topLeftCorner(2, 2);
  pinv.bottomRightCorner(2, 2) = inv.bottomRightCorner(2, 2);
  const double left = -std::log(oracle::fk_det(pinv));
  const double mid = std::log(oracle::fk_det(a.matrix()));
  ComplexMatrix pa = ComplexMatrix::Zero(4, 4);
  pa.topLeftCorner(2, 2) = a.matrix().topLeftCorner(2, 2);
  pa.bottomRightCorner(2, 2) = a.matrix().bottomRightCorner(2, 2);
  const double right = std::log(oracle::fk_det(pa));
  EXPECT_NEAR(r.left->lhs, left, 1e-10);
  EXPECT_NEAR(r.left->rhs, mid, 1e-10);
  EXPECT_NEAR(r.right.rhs, right, 1e-10);
  EXPECT_GT(r.left->gap, 1e-8);
  EXPECT_GT(r.right.gap, 1e-8);
}

TEST(SquareInverseTest, Examples) {
  Rng rng(5);
  const HermitianMatrix m = random_member(testing_util::sampler(4, kHalves4), rng);
  EXPECT_NEAR(verify_square(m, kHalves4).gap, 0.0, 1e-12);
  EXPECT_NEAR(verify_inverse(m, kHalves4).gap, 0.0, 1e-12);

  const InequalityReport s = verify_square(herm({{1, 1}, {1, 1}}), kDiag2);
  EXPECT_NEAR(s.gap, 1.0, 1e-14);
  EXPECT_EQ(s.equality_expected, std::optional<bool>(false));

  const HermitianMatrix a = pd_nonmember(4, kHalves4, rng);
  EXPECT_GT(verify_square(a, kHalves4).gap, 1e-8);
  EXPECT_GT(verify_inverse(a, kHalves4).gap, 1e-8);
  EXPECT_EQ(kind_of([] { verify_inverse(diag({1, 0}), kDiag2); }), ErrorKind::kPrecondition);
}

TEST(SquareInverseTest, MatchesEigenvalueOracle) {
  Rng rng(6);
  for (int trial = 0; trial < 20; ++trial) {
    const HermitianMatrix a = random_hermitian(4, rng);
    const ComplexMatrix pa = pinch(a.matrix(), kHalves4);
    const ComplexMatrix d =
        pinch(oracle::multiply(a.matrix(), a.matrix()), kHalves4) - oracle::multiply(pa, pa);
    EXPECT_NEAR(verify_square(a, kHalves4).gap, oracle::lambda_min(d), 1e-10);
  }
}

TEST(ResolventTest, Examples) {
  Rng rng(7);
  const HermitianMatrix m = random_member(testing_util::sampler(4, kHalves4), rng);
  const ResolventReports eq = verify_resolvent(m, kHalves4, 1.0);
  EXPECT_TRUE(eq.first.equality_detected);
  EXPECT_TRUE(eq.second.equality_detected);

  const HermitianMatrix a = pd_nonmember(4, kHalves4, rng);
  const ResolventReports r = verify_resolvent(a, kHalves4, 1.0);
  EXPECT_GT(r.first.gap, 1e-8);
  EXPECT_GT(r.second.gap, 1e-8);
  EXPECT_FALSE(r.first.equality_detected);

  const ResolventReports big = verify_resolvent(a, kHalves4, 1e6);
  EXPECT_GE(big.first.gap, -1e-9);
  // Both gaps behave like (Phi(A^2) - Phi(A)^2) / lambda.
  const double sq = verify_square(a, kHalves4).gap;
  EXPECT_LE(big.first.gap, 2.0 * sq / 1e6);
  EXPECT_LE(big.second.gap, 2.0 * spectral_norm(a) * spectral_norm(a) / 1e6);
  EXPECT_GE(big.second.gap, 0.5 * sq / 1e6);
  EXPECT_EQ(kind_of([&] { verify_resolvent(a, kHalves4, 0.0); }), ErrorKind::kPrecondition);
}

TEST(OpMonotoneTest, Examples) {
  Rng rng(8);
  const HermitianMatrix a = pd_nonmember(4, kHalves4, rng);
  const InequalityReport lin = verify_op_monotone(ScalarFunction::linear(1, 2), a, kHalves4);
  EXPECT_NEAR(lin.gap, 0.0, 1e-10);
  EXPECT_TRUE(lin.equality_detected);
  EXPECT_EQ(lin.equality_expected, std::optional<bool>(true));

  const HermitianMatrix m = random_member(testing_util::sampler(4, kHalves4), rng);
  EXPECT_TRUE(verify_op_monotone(ScalarFunction::power(0.5), m, kHalves4).equality_detected);

  const ScalarFunction rep = ScalarFunction::monotone_rep({0, 0, {{1, 1}}});
  const InequalityReport r = verify_op_monotone(rep, a, kHalves4);
  const ComplexMatrix pa = pinch(a.matrix(), kHalves4);
  const ComplexMatrix fa = eval_rep_resolvent(MonotoneRep{0, 0, {{1, 1}}}, a).matrix();
  const ComplexMatrix fpa =
      eval_rep_resolvent(MonotoneRep{0, 0, {{1, 1}}}, HermitianMatrix::symmetrized(pa)).matrix();
  EXPECT_NEAR(r.gap, oracle::lambda_min(fpa - pinch(fa, kHalves4)), 1e-10);
  EXPECT_GT(r.gap, 1e-8);
  EXPECT_EQ(r.equality_expected, std::optional<bool>(false));

  EXPECT_EQ(kind_of([&] { verify_op_monotone(ScalarFunction::square(), a, kHalves4); }),
            ErrorKind::kPrecondition);
}

TEST(OpMonotoneTest, OpenDomainViaShift) {
  Rng rng(9);
  for (int trial = 0; trial < 20; ++trial) {
    const HermitianMatrix a =
        random_nonmember(testing_util::sampler(4, kHalves4, 1e-3, 10.0), 0.1, rng);
    const InequalityReport r = verify_op_monotone(ScalarFunction::log(), a, kHalves4);
    EXPECT_TRUE(r.holds) << r.gap;
  }
}

TEST(OpConvexTest, Examples) {
  Rng rng(10);
  const HermitianMatrix a = pd_nonmember(4, kHalves4, rng);
  const InequalityReport sq = verify_op_convex(ScalarFunction::square(), a, kHalves4);
  EXPECT_NEAR(sq.gap, verify_square(a, kHalves4).gap, 1e-10);
  EXPECT_GT(sq.gap, 1e-8);
  EXPECT_TRUE(verify_op_convex(ScalarFunction::linear(0, 3), a, kHalves4).equality_detected);
  const HermitianMatrix m = random_member(testing_util::sampler(4, kHalves4), rng);
  EXPECT_TRUE(verify_op_convex(ScalarFunction::square(), m, kHalves4).equality_detected);
  EXPECT_NEAR(verify_op_convex(ScalarFunction::reciprocal(), a, kHalves4).gap,
              verify_inverse(a, kHalves4).gap, 1e-10);
}

TEST(DetMonotoneTest, Examples) {
  Rng rng(11);
  const HermitianMatrix m = random_member(testing_util::sampler(4, kHalves4), rng);
  EXPECT_TRUE(verify_det_monotone(ScalarFunction::inv_perturb(), m, kHalves4).equality_detected);

  const HermitianMatrix a = pd_nonmember(4, kHalves4, rng);
  const InequalityReport r = verify_det_monotone(ScalarFunction::inv_perturb(), a, kHalves4);
  EXPECT_GT(r.gap, 1e-8);
  EXPECT_EQ(r.equality_expected, std::optional<bool>(false));

  const InequalityReport lin = verify_det_monotone(ScalarFunction::power(1.0), a, kHalves4);
  EXPECT_GT(lin.gap, 1e-8);
  EXPECT_EQ(lin.equality_expected, std::optional<bool>(false));
  EXPECT_NEAR(lin.gap, verify_arveson(a, kHalves4).right.gap, 1e-10);

  EXPECT_EQ(kind_of([&] { verify_det_monotone(ScalarFunction::linear(2, 0), a, kHalves4); }),
            ErrorKind::kPrecondition);
}

TEST(DetPerturbTest, AgreesWithDetMonotone) {
  Rng rng(12);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 + trial % 6;
    const BlockPartition p = BlockPartition::halves(n);
    const HermitianMatrix a = random_pd(testing_util::sampler(n, p), rng);
    const InequalityReport dp = verify_det_perturb(a, p);
    const InequalityReport dm = verify_det_monotone(ScalarFunction::inv_perturb(), a, p);
    EXPECT_NEAR(dp.gap, dm.gap, 1e-10);
    EXPECT_EQ(dp.equality_detected, dm.equality_detected);
  }
}

TEST(DetPerturbTest, Examples) {
  Rng rng(13);
  const HermitianMatrix m = random_member(testing_util::sampler(4, kHalves4), rng);
  EXPECT_TRUE(verify_det_perturb(m, kHalves4).equality_detected);
  const InequalityReport r = verify_det_perturb(herm({{3, 1}, {1, 2}}), kDiag2);
  // Delta(I + A^{-1}) with det A = 5: I + A^{-1} = [[1.4, -0.2], [-0.2, 1.6]].
  EXPECT_NEAR(r.rhs, 0.5 * std::log(1.4 * 1.6 - 0.04), 1e-13);
  EXPECT_NEAR(r.lhs, 0.5 * std::log((1 + 1.0 / 3) * 1.5), 1e-13);
  EXPECT_GT(r.gap, 0.0);
}

TEST(Matic1Test, Examples) {
  Rng rng(14);
  const HermitianMatrix a = pd_nonmember(4, kHalves4, rng);
  const InequalityReport zero = verify_matic1(a, HermitianMatrix::zero(4), kHalves4);
  EXPECT_TRUE(zero.equality_detected);
  EXPECT_EQ(zero.equality_expected, std::optional<bool>(true));

  const HermitianMatrix m = random_member(testing_util::sampler(4, kHalves4), rng);
  EXPECT_TRUE(verify_matic1(m, HermitianMatrix::identity(4), kHalves4).equality_detected);

  const InequalityReport r = verify_matic1(a, HermitianMatrix::identity(4), kHalves4);
  const ComplexMatrix pa = pinch(a.matrix(), kHalves4);
  const ComplexMatrix id = ComplexMatrix::Identity(4, 4);
  const double lhs = std::log(oracle::fk_det(pa + id)) - std::log(oracle::fk_det(pa));
  const double rhs = std::log(oracle::fk_det(a.matrix() + id)) - std::log(oracle::fk_det(a.matrix()));
  EXPECT_NEAR(r.gap, rhs - lhs, 1e-10);
  EXPECT_GT(r.gap, 1e-8);
  EXPECT_EQ(r.equality_expected, std::optional<bool>(false));

  EXPECT_EQ(kind_of([&] { verify_matic1(a, a, kHalves4); }), ErrorKind::kPrecondition);
}

TEST(Matic1Test, SingularBHasNoExpectation) {
  Rng rng(15);
  const HermitianMatrix a = pd_nonmember(4, kHalves4, rng);
  const InequalityReport r = verify_matic1(a, diag({1, 1, 0, 0}), kHalves4);
  EXPECT_TRUE(r.holds);
  EXPECT_FALSE(r.equality_expected.has_value());
}

TEST(Matic2Test, Examples) {
  Rng rng(16);
  for (int trial = 0; trial < 20; ++trial) {
    const HermitianMatrix a = random_pd(testing_util::sampler(4, kHalves4), rng);
    ComplexMatrix b = ComplexMatrix::Zero(4, 4);
    b.topLeftCorner(2, 2) = random_pd(testing_util::sampler(2, BlockPartition::full(2)), rng).matrix();
    const InequalityReport r = verify_matic2(a, HermitianMatrix::from(b), kHalves4);
    EXPECT_TRUE(r.equality_detected) << r.gap;
    EXPECT_EQ(r.equality_expected, std::optional<bool>(true));
  }
  const HermitianMatrix m = random_member(testing_util::sampler(4, kHalves4), rng);
  const HermitianMatrix bpd = random_member(testing_util::sampler(4, kHalves4), rng);
  EXPECT_TRUE(verify_matic2(m, bpd, kHalves4).equality_detected);
  const HermitianMatrix a = pd_nonmember(4, kHalves4, rng);
  const InequalityReport r = verify_matic2(a, bpd, kHalves4);
  EXPECT_GT(r.gap, 1e-8);
  EXPECT_EQ(r.equality_expected, std::optional<bool>(false));
}

TEST(MaticVarTest, FixedWitness) {
  const InequalityReport r = verify_matic_var_counterexample(herm({{1, 1}, {1, 1}}), kDiag2);
  EXPECT_NEAR(r.gap, 0.5 * std::log(3.0) - std::log(2.0), 1e-12);
  EXPECT_FALSE(r.holds);
  EXPECT_NEAR(std::exp(r.lhs), 2.0, 1e-12);
  EXPECT_NEAR(std::exp(r.rhs), std::sqrt(3.0), 1e-12);
  EXPECT_EQ(kind_of([] { verify_matic_var_counterexample(diag({1, 2}), kDiag2); }),
            ErrorKind::kPrecondition);
}

TEST(MaticVarTest, RandomNonmembersViolate) {
  Rng rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    SamplerConfig cfg = testing_util::sampler(4, kHalves4);
    const HermitianMatrix b = random_nonmember(cfg, 0.1, rng);
    EXPECT_FALSE(verify_matic_var_counterexample(b, kHalves4).holds);
  }
}

TEST(TraceJensenTest, Examples) {
  Rng rng(18);
  const HermitianMatrix a = random_hermitian(3, rng);
  const PositiveMapSpec tr = PositiveMapSpec::trace_map();
  EXPECT_TRUE(verify_trace_jensen(ScalarFunction::linear(1, 2), a, tr).equality_detected);

  const InequalityReport v = verify_trace_jensen(ScalarFunction::square(), a, tr);
  const double t1 = normalized_trace(a.matrix()).real();
  const double t2 = normalized_trace(oracle::multiply(a.matrix(), a.matrix())).real();
  EXPECT_NEAR(v.gap, t2 - t1 * t1, 1e-12);
  EXPECT_GE(v.gap, 0.0);

  const PositiveMapSpec pin = PositiveMapSpec::pinching(BlockPartition::halves(3));
  const InequalityReport s = verify_trace_jensen(ScalarFunction::square(), a, pin);
  const ComplexMatrix pa = pinch(a.matrix(), BlockPartition::halves(3));
  EXPECT_NEAR(s.gap, t2 - normalized_trace(oracle::multiply(pa, pa)).real(), 1e-12);
}

TEST(LogconvexDetTest, Examples) {
  Rng rng(19);
  const HermitianMatrix a = pd_nonmember(4, kHalves4, rng);
  const PositiveMapSpec pin = PositiveMapSpec::pinching(kHalves4);
  EXPECT_TRUE(verify_logconvex_det(ScalarFunction::linear(2, 0), a, pin).equality_detected);

  const InequalityReport rec = verify_logconvex_det(ScalarFunction::reciprocal(), a, pin);
  const ArvesonReports arv = verify_arveson(a, kHalves4);
  // Delta(Phi(A)^{-1}) <= Delta(A^{-1}) against the oracle.
  const ComplexMatrix pa = pinch(a.matrix(), kHalves4);
  EXPECT_NEAR(rec.lhs, -std::log(oracle::fk_det(pa)), 1e-10);
  EXPECT_NEAR(rec.rhs, -std::log(oracle::fk_det(a.matrix())), 1e-10);
  EXPECT_NEAR(rec.gap, arv.right.gap, 1e-10);

  std::vector<std::pair<ComplexMatrix, double>> terms;
  for (int k = 0; k < 3; ++k) terms.emplace_back(haar_unitary(4, rng), 1.0 / 3.0);
  const PositiveMapSpec mix = PositiveMapSpec::unitary_mixing(terms);
  EXPECT_TRUE(verify_logconvex_det(ScalarFunction::one_plus_inv(), a, mix).holds);
}

TEST(UnitPositiveTest, IdentityMixingGivesEquality) {
  Rng rng(20);
  const HermitianMatrix a = pd_nonmember(3, BlockPartition::halves(3), rng);
  const HermitianMatrix b = random_pd(testing_util::sampler(3, BlockPartition::full(3)), rng);
  const PositiveMapSpec id = PositiveMapSpec::unitary_mixing({{ComplexMatrix::Identity(3, 3), 1.0}});
  const UnitPositiveHadamardReports h = verify_unit_positive_hadamard(a, id);
  EXPECT_TRUE(h.right.equality_detected);
  ASSERT_TRUE(h.left);
  EXPECT_TRUE(h.left->equality_detected);
  EXPECT_TRUE(verify_unit_positive_perturb(a, id).equality_detected);
  EXPECT_TRUE(verify_unit_positive_matic(a, b, id).equality_detected);
  EXPECT_FALSE(h.right.equality_expected.has_value());
}

TEST(UnitPositiveTest, TraceMapIsAmGm) {
  Rng rng(21);
  const HermitianMatrix a = random_pd(testing_util::sampler(4, BlockPartition::full(4)), rng);
  const UnitPositiveHadamardReports h =
      verify_unit_positive_hadamard(a, PositiveMapSpec::trace_map());
  EXPECT_NEAR(h.right.rhs, std::log(normalized_trace(a.matrix()).real()), 1e-12);
  EXPECT_NEAR(h.right.lhs, std::log(oracle::fk_det(a.matrix())), 1e-10);
  EXPECT_TRUE(h.right.holds);
}

TEST(UnitPositiveTest, RandomMixingHolds) {
  Rng rng(22);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + trial % 4;
    std::vector<std::pair<ComplexMatrix, double>> terms;
    for (int k = 0; k < 3; ++k) terms.emplace_back(haar_unitary(n, rng), 1.0 / 3.0);
    const PositiveMapSpec mix = PositiveMapSpec::unitary_mixing(terms);
    const SamplerConfig cfg = testing_util::sampler(n, BlockPartition::full(n));
    const HermitianMatrix a = random_pd(cfg, rng);
    const HermitianMatrix b = random_pd(cfg, rng);
    const UnitPositiveHadamardReports h = verify_unit_positive_hadamard(a, mix);
    EXPECT_TRUE(h.right.holds);
    EXPECT_TRUE(h.left && h.left->holds);
    EXPECT_TRUE(verify_unit_positive_perturb(a, mix).holds);
    EXPECT_TRUE(verify_unit_positive_matic(a, b, mix).holds);
  }
}

TEST(GaussianEntropyTest, Examples) {
  Rng rng(23);
  const HermitianMatrix m = random_member(testing_util::sampler(4, kHalves4), rng);
  const InequalityReport eq = verify_gaussian_entropy(m, kHalves4);
  EXPECT_TRUE(eq.equality_detected);
  EXPECT_EQ(eq.equality_expected, std::optional<bool>(true));

  const double rho = 0.5;
  const InequalityReport r = verify_gaussian_entropy(herm({{1, rho}, {rho, 1}}), kDiag2);
  EXPECT_NEAR(r.gap, 0.5 * std::log(1.0 / (1.0 - rho * rho)), 1e-12);
  const double h1 = 0.5 * std::log(2 * std::numbers::pi * std::numbers::e);
  EXPECT_NEAR(r.rhs, 2 * h1, 1e-12);

  for (int trial = 0; trial < 30; ++trial) {
    const HermitianMatrix s = random_pd(testing_util::sampler(4, kHalves4), rng);
    EXPECT_NEAR(verify_gaussian_entropy(s, kHalves4).gap, 0.5 * verify_fischer(s, kHalves4).gap,
                1e-10);
  }
}

// Constructed instances inside / outside each equality characterization.
TEST(EqualityRoundTripTest, RegistryGenerators) {
  for (const IneqInfo& info : registry()) {
    if (!info.equality_clause) continue;
    std::vector<std::string> fns = default_functions(info.function_role);
    if (fns.empty()) fns.push_back("");
    for (InstanceMode mode : {InstanceMode::kInClause, InstanceMode::kOutOfClause}) {
      int checked = 0;
      for (int trial = 0; trial < 120; ++trial) {
        TrialContext ctx;
        ctx.n = 2 + trial % 3;
        ctx.partition = trial % 2 ? BlockPartition::diagonal(ctx.n) : BlockPartition::halves(ctx.n);
        if (!fns[trial % fns.size()].empty()) {
          ctx.function = ScalarFunction::parse(fns[trial % fns.size()]);
        }
        ctx.mode = mode;
        Rng rng(derive_seed(99, hash_id(info.id), static_cast<std::uint64_t>(trial)));
        const Instance inst = generate_instance(info, ctx, rng);
        for (const InequalityReport& r : evaluate(info, ctx, inst)) {
          if (!r.equality_expected) continue;
          ++checked;
          const bool want = mode == InstanceMode::kInClause;
          EXPECT_EQ(*r.equality_expected, want) << info.id << "/" << r.part << " trial " << trial;
          EXPECT_EQ(r.equality_detected, want)
              << info.id << "/" << r.part << " trial " << trial << " gap " << r.gap;
          EXPECT_TRUE(r.holds) << info.id << " trial " << trial;
        }
      }
      EXPECT_GE(checked, 120) << info.id << " " << to_string(mode);
    }
  }
}

}  // namespace
}  // namespace fkineq
