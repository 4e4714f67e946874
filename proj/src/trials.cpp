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

#include "fkineq/trials.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <set>
#include <sstream>

#include <omp.h>

#include "fkineq/matrix_io.hpp"
#include "fkineq/verifiers.hpp"

namespace fkineq {

namespace {

constexpr int kMaxResamples = 20;

std::string context_key(const TrialSpec& spec) {
  const TrialContext& c = spec.ctx;
  std::ostringstream os;
  os << spec.ineq_id << '|' << c.n << '|' << c.partition.to_string() << '|'
     << (c.function ? c.function->to_string() : "") << '|'
     << (c.map ? c.map->describe() : "") << '|' << to_string(c.mode) << '|'
     << format_double(c.lambda) << '|' << format_double(c.spectrum_lo) << '|'
     << format_double(c.spectrum_hi);
  return os.str();
}

double objective(const std::vector<InequalityReport>& reports) {
  double best = std::numeric_limits<double>::infinity();
  for (const InequalityReport& r : reports) best = std::min(best, r.gap / r.scale);
  return best;
}

const InequalityReport& worst(const std::vector<InequalityReport>& reports) {
  return *std::min_element(reports.begin(), reports.end(),
                           [](const InequalityReport& x, const InequalityReport& y) {
                             return x.gap / x.scale < y.gap / y.scale;
                           });
}

}  // namespace

std::uint64_t stream_id(const TrialSpec& spec) { return hash_id(context_key(spec)); }

void validate_spec(const TrialSpec& spec) {
  const IneqInfo& info = lookup(spec.ineq_id);
  validate_context(info, spec.ctx);
  if (spec.trials < 0) throw Error(ErrorKind::kSpecification, "trials must be >= 0");
  const auto check_dim = [&](const std::optional<HermitianMatrix>& m, const char* name) {
    if (m && m->dim() != spec.ctx.n) {
      throw Error(ErrorKind::kShape, std::string(name) + " has dimension " +
                                         std::to_string(m->dim()) + ", expected " +
                                         std::to_string(spec.ctx.n));
    }
  };
  check_dim(spec.fixed_a, "matrix A");
  check_dim(spec.fixed_b, "matrix B");
}

TrialOutcome run_one_trial(const TrialSpec& spec, int trial) {
  TrialOutcome out;
  out.trial = trial;
  out.seed = derive_seed(spec.seed, stream_id(spec), static_cast<std::uint64_t>(trial));
  const bool fixed = spec.fixed_a || spec.fixed_b;
  try {
    const IneqInfo& info = lookup(spec.ineq_id);
    Rng rng(out.seed);
    for (int attempt = 0; attempt <= kMaxResamples; ++attempt) {
      Instance inst = generate_instance(info, spec.ctx, rng);
      if (info.id == ineq::kMaticVar) {
        if (spec.fixed_b) inst.b = spec.fixed_b;
        else if (spec.fixed_a) inst.b = spec.fixed_a;
      } else {
        if (spec.fixed_a) inst.a = *spec.fixed_a;
        if (spec.fixed_b) inst.b = spec.fixed_b;
      }
      if (!fixed && instance_condition(info, inst) > kResampleConditionCap) {
        ++out.resamples;
        continue;
      }
      try {
        out.reports = evaluate(info, spec.ctx, inst);
      } catch (const Error& e) {
        if (e.kind() == ErrorKind::kIllConditioned && !fixed) {
          ++out.resamples;
          continue;
        }
        throw;
      }
      for (InequalityReport& r : out.reports) {
        r.seed = out.seed;
        r.trial = trial;
      }
      out.instance = std::move(inst);
      return out;
    }
    out.error = "resample limit reached: every draw exceeded the condition cap";
    out.error_kind = ErrorKind::kIllConditioned;
  } catch (const Error& e) {
    out.error = e.what();
    out.error_kind = e.kind();
  } catch (const std::exception& e) {
    out.error = e.what();
    out.error_kind = ErrorKind::kNumerical;
  }
  return out;
}

std::vector<TrialOutcome> run_trials_serial(const TrialSpec& spec) {
  validate_spec(spec);
  std::vector<TrialOutcome> out;
  out.reserve(static_cast<std::size_t>(spec.trials));
  for (int t = 0; t < spec.trials; ++t) out.push_back(run_one_trial(spec, t));
  return out;
}

std::vector<TrialOutcome> run_trials_parallel(const TrialSpec& spec, int jobs) {
  validate_spec(spec);
  std::vector<TrialOutcome> out(static_cast<std::size_t>(spec.trials));
  const int threads = jobs > 0 ? jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(threads)
  for (int t = 0; t < spec.trials; ++t) out[static_cast<std::size_t>(t)] = run_one_trial(spec, t);
  return out;
}

namespace {

HermitianMatrix clamp_spectrum(const HermitianMatrix& x, double lo, double hi) {
  Spectrum s = eig_hermitian(x);
  for (Eigen::Index i = 0; i < s.values.size(); ++i) s.values(i) = std::clamp(s.values(i), lo, hi);
  return HermitianMatrix::symmetrized(s.reconstruct());
}

enum class InputClass { kFixed, kHermitian, kPsd, kPd, kPsdMember, kPsdNonmember };

InputClass class_of_a(const IneqInfo& info, const TrialContext& ctx) {
  const std::string_view id = info.id;
  if (id == ineq::kMaticVar) return InputClass::kFixed;
  if (id == ineq::kSquare) return InputClass::kHermitian;
  if (id == ineq::kTraceJensen && ctx.function && ctx.function->domain().contains(-1.0)) {
    return InputClass::kHermitian;
  }
  if (id == ineq::kArvesonRight || id == ineq::kUpHadamard || id == ineq::kResolventI ||
      id == ineq::kResolventII) {
    return InputClass::kPsd;
  }
  return InputClass::kPd;
}

InputClass class_of_b(const IneqInfo& info) {
  const std::string_view id = info.id;
  if (id == ineq::kMatic1 || id == ineq::kMatic2) return InputClass::kPsdMember;
  if (id == ineq::kMaticVar) return InputClass::kPsdNonmember;
  if (info.uses_b) return InputClass::kPsd;
  return InputClass::kFixed;
}

/// Perturbs x and projects back into its class; nullopt when the candidate
/// cannot be projected (a non-member collapsed into the subalgebra).
std::optional<HermitianMatrix> perturb(const HermitianMatrix& x, InputClass cls, double step,
                                       const TrialContext& ctx, Rng& rng) {
  const double size = std::max(1.0, spectral_norm(x));
  const HermitianMatrix e = random_hermitian(static_cast<int>(x.dim()), rng) * (step * size);
  const HermitianMatrix y = x + e;
  switch (cls) {
    case InputClass::kFixed: return x;
    case InputClass::kHermitian: return y;
    case InputClass::kPsd: return clamp_spectrum(y, 0.0, ctx.spectrum_hi);
    case InputClass::kPd: return clamp_spectrum(y, ctx.spectrum_lo, ctx.spectrum_hi);
    case InputClass::kPsdMember:
      return clamp_spectrum(pinch(y, ctx.partition), 0.0, ctx.spectrum_hi);
    case InputClass::kPsdNonmember: {
      HermitianMatrix z = clamp_spectrum(y, 0.0, ctx.spectrum_hi);
      if (is_member(z.matrix(), ctx.partition, ctx.tol)) return std::nullopt;
      return z;
    }
  }
  return std::nullopt;
}

}  // namespace

FalsifyResult falsify(const TrialSpec& spec, int budget) {
  validate_spec(spec);
  if (budget < 0) throw Error(ErrorKind::kSpecification, "budget must be >= 0");
  const IneqInfo& info = lookup(spec.ineq_id);
  const TrialContext& ctx = spec.ctx;

  TrialOutcome seed_trial = run_one_trial(spec, 0);
  if (!seed_trial.error.empty()) {
    throw Error(seed_trial.error_kind, "falsify: seed instance failed: " + seed_trial.error);
  }
  FalsifyResult res;
  res.best = worst(seed_trial.reports);
  res.witness = seed_trial.instance;
  res.objective = objective(seed_trial.reports);

  const std::uint64_t fseed = derive_seed(spec.seed, stream_id(spec) ^ hash_id("falsify"), 0);
  Rng rng(fseed);
  const InputClass ca = class_of_a(info, ctx);
  const InputClass cb = class_of_b(info);
  constexpr int kLevels = 10;
  constexpr int kTriesPerLevel = 4;

  auto try_eval = [&](const Instance& inst, std::vector<InequalityReport>& reports) {
    ++res.evaluations;
    try {
      reports = evaluate(info, ctx, inst);
      return !reports.empty();
    } catch (const Error&) {
      return false;
    }
  };
  auto consider = [&](const Instance& inst, const std::vector<InequalityReport>& reports,
                      double obj) {
    if (obj < res.objective) {
      res.objective = obj;
      res.best = worst(reports);
      res.best.seed = fseed;
      res.best.trial = res.evaluations;
      res.best.notes += (res.best.notes.empty() ? "" : "; ") +
                        std::string("falsify evaluation ") + std::to_string(res.evaluations);
      res.witness = inst;
    }
  };

  Instance current = seed_trial.instance;
  double current_obj = res.objective;
  while (res.evaluations < budget) {
    if (res.restarts > 0) {
      TrialOutcome fresh = run_one_trial(spec, res.restarts);
      ++res.evaluations;
      if (!fresh.error.empty()) {
        ++res.restarts;
        continue;
      }
      current = fresh.instance;
      current_obj = objective(fresh.reports);
      consider(current, fresh.reports, current_obj);
    }
    double step = 0.5;
    for (int level = 0; level < kLevels && res.evaluations < budget;) {
      bool improved = false;
      for (int k = 0; k < kTriesPerLevel && res.evaluations < budget; ++k) {
        Instance cand = current;
        const bool move_b = cb != InputClass::kFixed &&
                            (ca == InputClass::kFixed || rng.uniform(0.0, 1.0) < 0.5);
        if (move_b) {
          auto b = perturb(*current.b, cb, step, ctx, rng);
          if (!b) continue;
          cand.b = std::move(*b);
        } else {
          auto a = perturb(current.a, ca, step, ctx, rng);
          if (!a) continue;
          cand.a = std::move(*a);
        }
        std::vector<InequalityReport> reports;
        if (!try_eval(cand, reports)) continue;
        const double obj = objective(reports);
        if (obj < current_obj) {
          current = std::move(cand);
          current_obj = obj;
          consider(current, reports, obj);
          improved = true;
          break;
        }
      }
      if (!improved) {
        step *= 0.5;
        ++level;
      }
    }
    ++res.restarts;
  }
  return res;
}

PositiveMapSpec parse_map_arg(std::string_view text, int n, const BlockPartition& partition,
                              std::uint64_t seed) {
  if (text == "pinch") return PositiveMapSpec::pinching(partition);
  if (text == "trace") return PositiveMapSpec::trace_map();
  constexpr std::string_view kHaar = "mix:haar:";
  if (text.substr(0, kHaar.size()) == kHaar) {
    const std::string k_text(text.substr(kHaar.size()));
    std::size_t used = 0;
    int k = 0;
    try {
      k = std::stoi(k_text, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != k_text.size() || k < 1 || k > 64) {
      throw Error(ErrorKind::kParse, "map: bad unitary count in '" + std::string(text) + "'");
    }
    std::vector<std::pair<ComplexMatrix, double>> terms;
    for (int j = 0; j < k; ++j) {
      terms.emplace_back(haar_unitary(n, derive_seed(seed, hash_id("mix:haar"), j)),
                         1.0 / k);
    }
    return PositiveMapSpec::unitary_mixing(std::move(terms));
  }
  constexpr std::string_view kMix = "mix:";
  if (text.substr(0, kMix.size()) == kMix && text.size() > kMix.size()) {
    return read_mixing_file(std::string(text.substr(kMix.size())));
  }
  throw Error(ErrorKind::kParse, "map: expected pinch, trace, mix:<file> or mix:haar:<k>, got '" +
                                     std::string(text) + "'");
}

std::vector<TrialSpec> suite_cells(const SuiteConfig& cfg) {
  std::vector<TrialSpec> cells;
  std::set<std::string> seen;
  const auto wanted = [&](std::string_view id) {
    return cfg.ids.empty() || std::find(cfg.ids.begin(), cfg.ids.end(), id) != cfg.ids.end();
  };
  for (const std::string& id : cfg.ids) lookup(id);

  for (const IneqInfo& info : registry()) {
    if (!wanted(info.id)) continue;
    if (cfg.mode != InstanceMode::kGeneric && !info.equality_clause) continue;
    std::vector<std::string> fns = cfg.functions.empty() ? default_functions(info.function_role)
                                                         : cfg.functions;
    if (info.function_role == FunctionRole::kNone) fns = {""};

    for (int n : cfg.dims) {
      std::vector<std::pair<std::string, std::string>> layouts;  // (partition, map)
      if (info.uses_map) {
        for (const std::string& m : cfg.maps) {
          if (m == "pinch") {
            for (const std::string& p : cfg.partitions) layouts.emplace_back(p, m);
          } else if (!cfg.partitions.empty()) {
            layouts.emplace_back(cfg.partitions.front(), m);
          }
        }
      } else {
        for (const std::string& p : cfg.partitions) layouts.emplace_back(p, "");
      }
      for (const auto& [ptext, mtext] : layouts) {
        for (const std::string& ftext : fns) {
          TrialSpec spec;
          spec.ineq_id = std::string(info.id);
          spec.seed = cfg.seed;
          spec.trials = cfg.trials;
          TrialContext& c = spec.ctx;
          c.n = n;
          c.mode = cfg.mode;
          c.tol = cfg.tol;
          c.lambda = cfg.lambda;
          c.spectrum_lo = cfg.spectrum_lo;
          c.spectrum_hi = cfg.spectrum_hi;
          try {
            c.partition = BlockPartition::parse(ptext, n);
            if (!ftext.empty()) c.function = ScalarFunction::parse(ftext);
            if (!mtext.empty()) c.map = parse_map_arg(mtext, n, c.partition, cfg.seed);
            validate_context(info, c);
          } catch (const Error&) {
            continue;
          }
          if (!seen.insert(context_key(spec)).second) continue;
          cells.push_back(std::move(spec));
        }
      }
    }
  }
  if (cells.empty()) throw Error(ErrorKind::kSpecification, "suite: the grid is empty");
  return cells;
}

void RunSummary::add(const std::string& ineq_id, const TrialOutcome& outcome) {
  const IneqInfo& info = lookup(ineq_id);
  if (!outcome.error.empty()) {
    IdSummary& s = by_id_[ineq_id];
    s.guaranteed = info.guaranteed;
    s.expects_violation = info.expects_violation;
    ++s.errors;
    return;
  }
  for (const InequalityReport& r : outcome.reports) {
    const std::string key = r.part.empty() ? r.ineq_id : r.ineq_id + "/" + r.part;
    const bool first = by_id_.find(key) == by_id_.end();
    IdSummary& s = by_id_[key];
    s.guaranteed = info.guaranteed;
    s.expects_violation = info.expects_violation;
    const double g = r.gap / r.scale;
    s.min_scaled_gap = first || s.records == 0 ? g : std::min(s.min_scaled_gap, g);
    ++s.records;
    if (r.holds) ++s.holds;
    if (r.equality_detected) ++s.equality_detected;
    if (r.equality_expected) {
      if (*r.equality_expected) {
        ++(r.equality_detected ? s.eq_true_pos : s.eq_false_neg);
      } else {
        ++(r.equality_detected ? s.eq_false_pos : s.eq_true_neg);
      }
    }
  }
}

bool RunSummary::failed() const {
  for (const auto& [id, s] : by_id_) {
    if (s.errors > 0) return true;
    if (s.guaranteed && s.holds < s.records) return true;
    if (s.expects_violation && s.holds > 0) return true;
  }
  return false;
}

std::string RunSummary::format() const {
  std::string out;
  char line[256];
  std::snprintf(line, sizeof line, "%-26s %8s %8s %12s %8s %23s %6s  %s\n", "ineq_id", "trials",
                "holds", "min_gap", "eq_det", "eq tp/fn/fp/tn", "errors", "status");
  out += line;
  for (const auto& [id, s] : by_id_) {
    const bool ok = s.errors == 0 && (!s.guaranteed || s.holds == s.records) &&
                    (!s.expects_violation || s.holds == 0);
    const std::string conf = std::to_string(s.eq_true_pos) + "/" + std::to_string(s.eq_false_neg) +
                             "/" + std::to_string(s.eq_false_pos) + "/" +
                             std::to_string(s.eq_true_neg);
    std::snprintf(line, sizeof line, "%-26s %8lld %8lld %12.4e %8lld %23s %6lld  %s\n", id.c_str(),
                  s.records, s.holds, s.min_scaled_gap, s.equality_detected, conf.c_str(),
                  s.errors, ok ? "ok" : "FAIL");
    out += line;
  }
  return out;
}

}  // namespace fkineq
