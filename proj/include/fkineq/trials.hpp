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


// Trial batches over one registry id: a serial reference runner, an OpenMP
// runner with identical output, the falsification search and the suite grid.

#ifndef FKINEQ_TRIALS_HPP
#define FKINEQ_TRIALS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fkineq/registry.hpp"

namespace fkineq {

struct TrialSpec {
  std::string ineq_id;
  TrialContext ctx;
  std::uint64_t seed = 0;
  int trials = 100;
  /// Replace the sampled inputs. For matic_var_counterexample the fixed A
  /// is taken as B.
  std::optional<HermitianMatrix> fixed_a;
  std::optional<HermitianMatrix> fixed_b;
};

struct TrialOutcome {
  int trial = 0;
  std::uint64_t seed = 0;
  Instance instance;
  std::vector<InequalityReport> reports;
  /// Empty on success.
  std::string error;
  ErrorKind error_kind = ErrorKind::kInput;
  int resamples = 0;
};

/// Stream id for the per-trial seeds: a hash over the id and every setting
/// that shapes the instance distribution.
std::uint64_t stream_id(const TrialSpec& spec);

/// Never throws for a validated spec; failures land in TrialOutcome::error.
/// Instances above kResampleConditionCap are redrawn (up to 20 times).
TrialOutcome run_one_trial(const TrialSpec& spec, int trial);

/// Both throw kSpecification / kInput for an invalid spec before running.
std::vector<TrialOutcome> run_trials_serial(const TrialSpec& spec);
/// jobs <= 0 uses the OpenMP default. Output is ordered by trial index and
/// equal to run_trials_serial.
std::vector<TrialOutcome> run_trials_parallel(const TrialSpec& spec, int jobs = 0);

void validate_spec(const TrialSpec& spec);

struct FalsifyResult {
  InequalityReport best;
  Instance witness;
  /// gap / scale of `best`.
  double objective = 0.0;
  /// Evaluations spent beyond the seed instance.
  int evaluations = 0;
  int restarts = 0;
};

/// Random restarts plus hill climbing on the scaled gap. Steps are Hermitian
/// Gaussian perturbations projected back into the precondition class; the
/// step halves after a round without improvement, for at most 10 levels.
/// Budget 0 returns the report of the seed instance (trial 0).
FalsifyResult falsify(const TrialSpec& spec, int budget);

/// pinch | trace | mix:<file> | mix:haar:<k>. Haar unitaries are drawn from
/// `seed`.
PositiveMapSpec parse_map_arg(std::string_view text, int n, const BlockPartition& partition,
                              std::uint64_t seed);

struct SuiteConfig {
  std::vector<int> dims = {2, 3, 4, 8};
  std::vector<std::string> partitions = {"diag", "halves"};
  std::vector<std::string> maps = {"pinch", "trace", "mix:haar:3"};
  /// Replaces the per-role default function sets when non-empty.
  std::vector<std::string> functions;
  /// Empty means every id that applies in `mode`.
  std::vector<std::string> ids;
  int trials = 200;
  std::uint64_t seed = 0;
  InstanceMode mode = InstanceMode::kGeneric;
  ToleranceConfig tol;
  double lambda = 1.0;
  double spectrum_lo = 0.1;
  double spectrum_hi = 10.0;
};

/// Expands the grid into runnable cells. Partitions that do not fit a
/// dimension (or have no non-members where they are needed) are skipped;
/// functions that do not meet an id's hypothesis are skipped. Throws
/// kSpecification when nothing is left.
std::vector<TrialSpec> suite_cells(const SuiteConfig& cfg);

/// Per (ineq_id, part) aggregate of a run.
struct IdSummary {
  bool guaranteed = true;
  bool expects_violation = false;
  long long records = 0;
  long long holds = 0;
  long long errors = 0;
  double min_scaled_gap = 0.0;
  long long equality_detected = 0;
  // Confusion counts where a characterization applies.
  long long eq_true_pos = 0;
  long long eq_false_neg = 0;
  long long eq_false_pos = 0;
  long long eq_true_neg = 0;
};

class RunSummary {
 public:
  void add(const std::string& ineq_id, const TrialOutcome& outcome);
  /// A guaranteed inequality failed, a counterexample did not violate, or a
  /// sampled trial errored.
  bool failed() const;
  std::string format() const;
  const std::map<std::string, IdSummary>& by_id() const { return by_id_; }

 private:
  std::map<std::string, IdSummary> by_id_;
};

}  // namespace fkineq

#endif  // FKINEQ_TRIALS_HPP
