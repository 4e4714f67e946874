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


// Registry of checkable inequalities: per-id metadata, instance generators
// for generic / in-clause / out-of-clause inputs, and a uniform evaluator.

#ifndef FKINEQ_REGISTRY_HPP
#define FKINEQ_REGISTRY_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fkineq/linalg.hpp"
#include "fkineq/op_functions.hpp"
#include "fkineq/report.hpp"
#include "fkineq/sampling.hpp"
#include "fkineq/subalgebra.hpp"

namespace fkineq {

enum class FunctionRole { kNone, kOpMonotone, kOpConvex, kDetMonotone, kConvex, kLogConvex };

struct IneqInfo {
  std::string_view id;
  /// The inequality is a theorem: every valid instance must satisfy it.
  bool guaranteed = true;
  /// The instance class is built to violate the inequality.
  bool expects_violation = false;
  /// The report carries an iff characterization of equality.
  bool equality_clause = false;
  FunctionRole function_role = FunctionRole::kNone;
  /// Acts through a PositiveMapSpec rather than a block partition alone.
  bool uses_map = false;
  bool uses_b = false;
};

/// All ids in a fixed order.
const std::vector<IneqInfo>& registry();
/// Throws kInput for an unknown id.
const IneqInfo& lookup(std::string_view id);

/// Default function set for a role, as parseable text.
std::vector<std::string> default_functions(FunctionRole role);

enum class InstanceMode { kGeneric, kInClause, kOutOfClause };

std::string_view to_string(InstanceMode mode);
/// Accepts generic, in-clause, out-of-clause.
InstanceMode parse_mode(std::string_view text);

struct Instance {
  HermitianMatrix a;
  std::optional<HermitianMatrix> b;
};

/// Everything a trial needs apart from the random inputs.
struct TrialContext {
  int n = 4;
  BlockPartition partition = BlockPartition::halves(4);
  std::optional<ScalarFunction> function;
  /// Defaults to the pinching onto `partition`.
  std::optional<PositiveMapSpec> map;
  double lambda = 1.0;
  double spectrum_lo = 0.1;
  double spectrum_hi = 10.0;
  InstanceMode mode = InstanceMode::kGeneric;
  ToleranceConfig tol;

  PositiveMapSpec effective_map() const;
};

/// Throws kSpecification when the context cannot serve the id (missing or
/// unsuitable function, mode without an equality clause, dimension mismatch).
void validate_context(const IneqInfo& info, const TrialContext& ctx);

/// Draws one instance from the id's precondition class.
Instance generate_instance(const IneqInfo& info, const TrialContext& ctx, Rng& rng);

/// Runs the verifier. Paired ids return one report per part that applies.
std::vector<InequalityReport> evaluate(const IneqInfo& info, const TrialContext& ctx,
                                       const Instance& inst);

/// Largest condition number among the PD inputs the verifier inverts; 1
/// when nothing is inverted.
double instance_condition(const IneqInfo& info, const Instance& inst);

}  // namespace fkineq

#endif  // FKINEQ_REGISTRY_HPP
