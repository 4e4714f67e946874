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

#include "fkineq/registry.hpp"

#include <algorithm>
#include <sstream>

#include "fkineq/verifiers.hpp"

namespace fkineq {

namespace {

std::vector<IneqInfo> build_registry() {
  using R = FunctionRole;
  std::vector<IneqInfo> v;
  auto add = [&v](std::string_view id, bool eq, R role = R::kNone, bool map = false,
                  bool b = false) {
    IneqInfo info;
    info.id = id;
    info.equality_clause = eq;
    info.function_role = role;
    info.uses_map = map;
    info.uses_b = b;
    v.push_back(info);
  };
  add(ineq::kHadamard, true);
  add(ineq::kFischer, true);
  add(ineq::kArvesonLeft, true);
  add(ineq::kArvesonRight, true);
  add(ineq::kSquare, true);
  add(ineq::kInverse, true);
  add(ineq::kResolventI, true);
  add(ineq::kResolventII, true);
  add(ineq::kOpMonotone, true, R::kOpMonotone);
  add(ineq::kOpConvex, true, R::kOpConvex);
  add(ineq::kDetMonotone, true, R::kDetMonotone);
  add(ineq::kDetPerturb, true);
  add(ineq::kMatic1, true, R::kNone, false, true);
  add(ineq::kMatic2, true, R::kNone, false, true);
  add(ineq::kMaticVar, false, R::kNone, false, true);
  v.back().guaranteed = false;
  v.back().expects_violation = true;
  add(ineq::kTraceJensen, false, R::kConvex, true);
  add(ineq::kLogconvexDet, false, R::kLogConvex, true);
  add(ineq::kUpHadamard, false, R::kNone, true);
  add(ineq::kUpPerturb, false, R::kNone, true);
  add(ineq::kUpMatic, false, R::kNone, true, true);
  add(ineq::kGaussianEntropy, true);
  return v;
}

[[noreturn]] void bad_context(std::string_view id, const std::string& what) {
  throw Error(ErrorKind::kSpecification, std::string(id) + ": " + what);
}

bool is_id(const IneqInfo& info, std::string_view id) { return info.id == id; }

SamplerConfig sampler_for(const TrialContext& ctx) {
  SamplerConfig cfg;
  cfg.n = ctx.n;
  cfg.partition = ctx.partition;
  cfg.spectrum_lo = ctx.spectrum_lo;
  cfg.spectrum_hi = ctx.spectrum_hi;
  cfg.rank = std::max(0, ctx.n - 1);
  cfg.trials = 1;
  return cfg;
}

/// PSD member supported on the first block only: diag(B1, 0, ..., 0).
HermitianMatrix first_block_member(const SamplerConfig& cfg, Rng& rng) {
  const int k = cfg.partition.sizes().front();
  SamplerConfig sub = cfg;
  sub.n = k;
  sub.partition = BlockPartition::full(k);
  sub.rank = 0;
  const HermitianMatrix b1 = random_pd(sub, rng);
  ComplexMatrix m = ComplexMatrix::Zero(cfg.n, cfg.n);
  m.topLeftCorner(k, k) = b1.matrix();
  return HermitianMatrix::symmetrized(m);
}

HermitianMatrix maybe_singular(const SamplerConfig& cfg, Rng& rng) {
  if (cfg.n > 1 && rng.uniform(0.0, 1.0) < 0.25) return random_psd_singular(cfg, rng);
  return random_pd(cfg, rng);
}

Instance generic_instance(const IneqInfo& info, const TrialContext& ctx, Rng& rng) {
  const SamplerConfig cfg = sampler_for(ctx);
  const std::string_view id = info.id;
  if (id == ineq::kArvesonRight || id == ineq::kUpHadamard || id == ineq::kResolventI ||
      id == ineq::kResolventII) {
    return {maybe_singular(cfg, rng), std::nullopt};
  }
  if (id == ineq::kSquare) {
    return {random_hermitian(ctx.n, rng) * ctx.spectrum_hi, std::nullopt};
  }
  if (id == ineq::kMatic1 || id == ineq::kMatic2) {
    HermitianMatrix a = random_pd(cfg, rng);
    const double u = rng.uniform(0.0, 1.0);
    HermitianMatrix b = u < 0.6 ? random_member(cfg, rng) : first_block_member(cfg, rng);
    return {std::move(a), std::move(b)};
  }
  if (id == ineq::kMaticVar) {
    return {HermitianMatrix::identity(ctx.n), random_nonmember(cfg, 0.1, rng)};
  }
  if (id == ineq::kUpMatic) {
    HermitianMatrix a = random_pd(cfg, rng);
    SamplerConfig bcfg = cfg;
    bcfg.rank = rng.uniform_int(0, ctx.n);
    return {std::move(a), random_psd_singular(bcfg, rng)};
  }
  if (id == ineq::kTraceJensen && ctx.function && ctx.function->domain().contains(-1.0)) {
    return {random_hermitian(ctx.n, rng) * ctx.spectrum_hi, std::nullopt};
  }
  return {random_pd(cfg, rng), std::nullopt};
}

Instance in_clause_instance(const IneqInfo& info, const TrialContext& ctx, Rng& rng) {
  SamplerConfig cfg = sampler_for(ctx);
  const std::string_view id = info.id;
  if (id == ineq::kHadamard) {
    cfg.partition = BlockPartition::diagonal(ctx.n);
    return {random_member(cfg, rng), std::nullopt};
  }
  if (id == ineq::kMatic1) {
    HermitianMatrix a = random_member(cfg, rng);
    if (rng.uniform(0.0, 1.0) < 0.25) return {a, HermitianMatrix::zero(ctx.n)};
    return {std::move(a), random_member(cfg, rng)};
  }
  if (id == ineq::kMatic2) {
    if (rng.uniform(0.0, 1.0) < 0.5) {
      HermitianMatrix a = random_pd(cfg, rng);
      return {std::move(a), first_block_member(cfg, rng)};
    }
    HermitianMatrix a = random_member(cfg, rng);
    return {std::move(a), random_member(cfg, rng)};
  }
  return {random_member(cfg, rng), std::nullopt};
}

Instance out_of_clause_instance(const IneqInfo& info, const TrialContext& ctx, Rng& rng) {
  SamplerConfig cfg = sampler_for(ctx);
  // Condition number at most 10.
  cfg.spectrum_lo = 1.0;
  cfg.spectrum_hi = 10.0;
  constexpr double kDistance = 0.1;
  const std::string_view id = info.id;
  if (id == ineq::kHadamard) {
    cfg.partition = BlockPartition::diagonal(ctx.n);
    return {random_nonmember(cfg, kDistance, rng), std::nullopt};
  }
  if (id == ineq::kMatic1 || id == ineq::kMatic2) {
    HermitianMatrix a = random_nonmember(cfg, kDistance, rng);
    return {std::move(a), random_member(cfg, rng)};
  }
  return {random_nonmember(cfg, kDistance, rng), std::nullopt};
}

}  // namespace

const std::vector<IneqInfo>& registry() {
  static const std::vector<IneqInfo> reg = build_registry();
  return reg;
}

const IneqInfo& lookup(std::string_view id) {
  for (const IneqInfo& info : registry()) {
    if (info.id == id) return info;
  }
  throw Error(ErrorKind::kInput, "unknown ineq_id '" + std::string(id) + "'");
}

std::vector<std::string> default_functions(FunctionRole role) {
  switch (role) {
    case FunctionRole::kOpMonotone:
      return {"power:0.5", "inv_perturb", "shift:log:0.5", "rep:[0,0;(1,1)]"};
    case FunctionRole::kOpConvex:
    case FunctionRole::kConvex:
      return {"square", "reciprocal", "one_plus_inv", "convrep:[0,0,0;(1,1)]"};
    case FunctionRole::kDetMonotone:
      return {"power:0.5", "inv_perturb", "rep:[0,0;(1,1)]", "log1p"};
    case FunctionRole::kLogConvex:
      return {"reciprocal", "one_plus_inv", "linear:2,0"};
    case FunctionRole::kNone:
      break;
  }
  return {};
}

std::string_view to_string(InstanceMode mode) {
  switch (mode) {
    case InstanceMode::kGeneric: return "generic";
    case InstanceMode::kInClause: return "in-clause";
    case InstanceMode::kOutOfClause: return "out-of-clause";
  }
  return "generic";
}

InstanceMode parse_mode(std::string_view text) {
  if (text == "generic") return InstanceMode::kGeneric;
  if (text == "in-clause") return InstanceMode::kInClause;
  if (text == "out-of-clause") return InstanceMode::kOutOfClause;
  throw Error(ErrorKind::kParse, "unknown mode '" + std::string(text) + "'");
}

PositiveMapSpec TrialContext::effective_map() const {
  return map ? *map : PositiveMapSpec::pinching(partition);
}

void validate_context(const IneqInfo& info, const TrialContext& ctx) {
  ctx.tol.validate();
  if (ctx.n < 1 || ctx.n > 32) bad_context(info.id, "n must lie in [1, 32]");
  if (ctx.partition.total() != ctx.n) {
    bad_context(info.id, "partition " + ctx.partition.to_string() + " does not sum to n");
  }
  if (!(ctx.spectrum_lo > 0.0) || !(ctx.spectrum_lo <= ctx.spectrum_hi)) {
    bad_context(info.id, "spectrum range must satisfy 0 < lo <= hi");
  }
  if (!(ctx.lambda > 0.0)) bad_context(info.id, "lambda must be positive");
  if (ctx.map && ctx.map->dim() != 0 && ctx.map->dim() != ctx.n) {
    bad_context(info.id, "map dimension does not match n");
  }
  if (ctx.mode != InstanceMode::kGeneric && !info.equality_clause) {
    bad_context(info.id, "no equality clause; only generic mode applies");
  }
  if ((is_id(info, ineq::kMaticVar) || ctx.mode == InstanceMode::kOutOfClause) &&
      ctx.partition.is_full()) {
    bad_context(info.id, "the full partition has no non-members");
  }
  if (info.function_role == FunctionRole::kNone) return;
  if (!ctx.function) bad_context(info.id, "a function (--fn) is required");
  const ScalarFunction& f = *ctx.function;
  const FunctionFlags& fl = f.flags();
  bool ok = true;
  switch (info.function_role) {
    case FunctionRole::kOpMonotone: ok = fl.operator_monotone; break;
    case FunctionRole::kOpConvex: ok = fl.operator_convex; break;
    case FunctionRole::kDetMonotone:
      ok = fl.operator_monotone && fl.positive_valued && !fl.constant;
      break;
    case FunctionRole::kConvex: ok = fl.convex; break;
    case FunctionRole::kLogConvex: ok = fl.log_convex; break;
    case FunctionRole::kNone: break;
  }
  if (!ok) bad_context(info.id, f.to_string() + " does not meet the function hypothesis");
  if (ctx.mode == InstanceMode::kOutOfClause && fl.affine) {
    bad_context(info.id, "affine functions are always in the equality clause");
  }
  if (!f.domain().contains(ctx.spectrum_lo) && !f.domain().contains(1.0)) {
    bad_context(info.id, f.to_string() + " is not defined on the sampled spectrum");
  }
}

Instance generate_instance(const IneqInfo& info, const TrialContext& ctx, Rng& rng) {
  switch (ctx.mode) {
    case InstanceMode::kInClause: return in_clause_instance(info, ctx, rng);
    case InstanceMode::kOutOfClause: return out_of_clause_instance(info, ctx, rng);
    case InstanceMode::kGeneric: break;
  }
  return generic_instance(info, ctx, rng);
}

std::vector<InequalityReport> evaluate(const IneqInfo& info, const TrialContext& ctx,
                                       const Instance& inst) {
  const ToleranceConfig& tol = ctx.tol;
  const BlockPartition& p = ctx.partition;
  const HermitianMatrix& a = inst.a;
  auto need_b = [&]() -> const HermitianMatrix& {
    if (!inst.b) bad_context(info.id, "a second matrix B is required");
    return *inst.b;
  };
  auto fn = [&]() -> const ScalarFunction& {
    if (!ctx.function) bad_context(info.id, "a function (--fn) is required");
    return *ctx.function;
  };
  const std::string_view id = info.id;

  std::vector<InequalityReport> out;
  if (id == ineq::kHadamard) {
    out.push_back(verify_hadamard(a, tol));
  } else if (id == ineq::kFischer) {
    out.push_back(verify_fischer(a, p, tol));
  } else if (id == ineq::kArvesonLeft) {
    ArvesonReports r = verify_arveson(a, p, tol);
    if (!r.left) bad_context(id, "the left inequality needs a regular A");
    out.push_back(std::move(*r.left));
  } else if (id == ineq::kArvesonRight) {
    out.push_back(verify_arveson(a, p, tol).right);
  } else if (id == ineq::kSquare) {
    out.push_back(verify_square(a, p, tol));
  } else if (id == ineq::kInverse) {
    out.push_back(verify_inverse(a, p, tol));
  } else if (id == ineq::kResolventI) {
    out.push_back(verify_resolvent(a, p, ctx.lambda, tol).first);
  } else if (id == ineq::kResolventII) {
    out.push_back(verify_resolvent(a, p, ctx.lambda, tol).second);
  } else if (id == ineq::kOpMonotone) {
    out.push_back(verify_op_monotone(fn(), a, p, tol));
  } else if (id == ineq::kOpConvex) {
    out.push_back(verify_op_convex(fn(), a, p, tol));
  } else if (id == ineq::kDetMonotone) {
    out.push_back(verify_det_monotone(fn(), a, p, tol));
  } else if (id == ineq::kDetPerturb) {
    out.push_back(verify_det_perturb(a, p, tol));
  } else if (id == ineq::kMatic1) {
    out.push_back(verify_matic1(a, need_b(), p, tol));
  } else if (id == ineq::kMatic2) {
    out.push_back(verify_matic2(a, need_b(), p, tol));
  } else if (id == ineq::kMaticVar) {
    out.push_back(verify_matic_var_counterexample(need_b(), p, tol));
  } else if (id == ineq::kTraceJensen) {
    out.push_back(verify_trace_jensen(fn(), a, ctx.effective_map(), tol));
  } else if (id == ineq::kLogconvexDet) {
    out.push_back(verify_logconvex_det(fn(), a, ctx.effective_map(), tol));
  } else if (id == ineq::kUpHadamard) {
    UnitPositiveHadamardReports r = verify_unit_positive_hadamard(a, ctx.effective_map(), tol);
    out.push_back(std::move(r.right));
    if (r.left) out.push_back(std::move(*r.left));
  } else if (id == ineq::kUpPerturb) {
    out.push_back(verify_unit_positive_perturb(a, ctx.effective_map(), tol));
  } else if (id == ineq::kUpMatic) {
    out.push_back(verify_unit_positive_matic(a, need_b(), ctx.effective_map(), tol));
  } else if (id == ineq::kGaussianEntropy) {
    out.push_back(verify_gaussian_entropy(a, p, tol));
  } else {
    throw Error(ErrorKind::kInput, "unknown ineq_id '" + std::string(id) + "'");
  }

  for (InequalityReport& r : out) {
    r.n = ctx.n;
    r.partition = id == ineq::kHadamard ? BlockPartition::diagonal(ctx.n).to_string()
                                        : p.to_string();
    if (ctx.function && info.function_role != FunctionRole::kNone) {
      r.function = ctx.function->to_string();
    }
    if (info.uses_map) r.map = ctx.effective_map().describe();
  }
  return out;
}

double instance_condition(const IneqInfo& info, const Instance& inst) {
  if (is_id(info, ineq::kMaticVar)) return 1.0;
  if (!is_pd(inst.a)) return 1.0;
  return condition_number(inst.a);
}

}  // namespace fkineq
