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

#include "fkineq/cli.hpp"

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "fkineq/matrix_io.hpp"
#include "fkineq/trials.hpp"
#include "fkineq/verifiers.hpp"

namespace fkineq {

namespace {

struct Options {
  std::vector<std::string> ineqs;
  int n = 4;
  std::string partition = "halves";
  std::vector<std::string> fns;
  int trials = 100;
  std::uint64_t seed = 0;
  int budget = 1000;
  double tol_psd = ToleranceConfig{}.psd_tol;
  double tol_eq = ToleranceConfig{}.equality_tol;
  std::string matrix;
  std::string matrix_b;
  std::string map = "pinch";
  std::string out;
  std::string format = "jsonl";
  int jobs = 0;
  std::string dump;
  std::string mode = "generic";
  double lambda = 1.0;
  double spectrum_lo = 0.1;
  double spectrum_hi = 10.0;
  std::vector<int> grid_n = {2, 3, 4, 8};
  std::vector<std::string> grid_partition = {"diag", "halves"};
  std::vector<std::string> grid_map = {"pinch", "trace", "mix:haar:3"};

  // Whether the flag was given on the command line.
  bool n_given = false;
  bool seed_given = false;
  bool map_given = false;
};

class Sink {
 public:
  Sink(const Options& o, std::ostream& fallback) : csv_(o.format == "csv") {
    if (o.out.empty()) {
      os_ = &fallback;
    } else {
      file_.open(o.out, std::ios::out | std::ios::trunc);
      if (!file_) throw Error(ErrorKind::kInput, "cannot open output file " + o.out);
      os_ = &file_;
    }
    if (csv_) *os_ << csv_header() << '\n';
  }
  void write(const InequalityReport& r) {
    *os_ << (csv_ ? to_csv_row(r) : to_json_line(r)) << '\n';
  }

 private:
  bool csv_;
  std::ofstream file_;
  std::ostream* os_ = nullptr;
};

std::uint64_t resolve_seed(const Options& o) {
  if (o.seed_given) return o.seed;
  if (const char* env = std::getenv("FKINEQ_SEED"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    errno = 0;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (errno != 0 || end == env || *end != '\0' || env[0] == '-') {
      throw Error(ErrorKind::kParse, std::string("FKINEQ_SEED is not an unsigned integer: ") + env);
    }
    return v;
  }
  return o.seed;
}

ToleranceConfig tolerances(const Options& o) {
  ToleranceConfig tol;
  tol.psd_tol = o.tol_psd;
  tol.equality_tol = o.tol_eq;
  tol.validate();
  return tol;
}

HermitianMatrix load_hermitian(const std::string& path, const ToleranceConfig& tol) {
  return HermitianMatrix::from(read_matrix_file(path), tol.hermiticity_tol);
}

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("--n", o.n, "Matrix dimension")->check(CLI::Range(1, 32));
  sub->add_option("--partition", o.partition, "Block partition: diag, full, halves or 2,2,...");
  sub->add_option("--seed", o.seed, "Base seed (falls back to FKINEQ_SEED)");
  sub->add_option("--tol-psd", o.tol_psd, "PSD tolerance");
  sub->add_option("--tol-eq", o.tol_eq, "Equality tolerance");
  sub->add_option("--out", o.out, "Write records to this file");
  sub->add_option("--format", o.format, "Record format")->check(CLI::IsMember({"jsonl", "csv"}));
  sub->add_option("--lambda", o.lambda, "Resolvent parameter");
  sub->add_option("--spectrum-lo", o.spectrum_lo, "Lower end of sampled spectra");
  sub->add_option("--spectrum-hi", o.spectrum_hi, "Upper end of sampled spectra");
}

void add_single(CLI::App* sub, Options& o) {
  sub->add_option("--ineq", o.ineqs, "Inequality id")->required()->expected(1);
  sub->add_option("--fn", o.fns, "Function, e.g. power:0.5")->expected(1);
  sub->add_option("--matrix", o.matrix, "Matrix file for A (B for matic_var_counterexample)");
  sub->add_option("--matrix-b", o.matrix_b, "Matrix file for B");
  sub->add_option("--map", o.map, "pinch | trace | mix:<file> | mix:haar:<k>");
  sub->add_option("--dump", o.dump, "Write the input matrices of every record here");
}

/// Shared by check and falsify.
TrialSpec build_single_spec(const Options& o, std::uint64_t seed, const ToleranceConfig& tol) {
  TrialSpec spec;
  spec.ineq_id = o.ineqs.front();
  const IneqInfo& info = lookup(spec.ineq_id);
  spec.seed = seed;
  spec.trials = o.trials;
  int n = o.n;
  if (!o.matrix.empty()) {
    spec.fixed_a = load_hermitian(o.matrix, tol);
    if (!o.n_given) n = static_cast<int>(spec.fixed_a->dim());
  }
  if (!o.matrix_b.empty()) {
    spec.fixed_b = load_hermitian(o.matrix_b, tol);
    if (!o.n_given && o.matrix.empty()) n = static_cast<int>(spec.fixed_b->dim());
  }
  if (spec.fixed_a || spec.fixed_b) spec.trials = 1;

  TrialContext& c = spec.ctx;
  c.n = n;
  c.tol = tol;
  c.partition = BlockPartition::parse(o.partition, n);
  c.mode = parse_mode(o.mode);
  c.lambda = o.lambda;
  c.spectrum_lo = o.spectrum_lo;
  c.spectrum_hi = o.spectrum_hi;
  if (info.function_role != FunctionRole::kNone) {
    c.function = ScalarFunction::parse(o.fns.empty() ? default_functions(info.function_role).front()
                                                     : o.fns.front());
  }
  if (info.uses_map) {
    c.map = parse_map_arg(o.map, n, c.partition, seed);
  } else if (o.map_given) {
    throw Error(ErrorKind::kInput, "--map applies only to map-based inequalities");
  }
  validate_spec(spec);
  return spec;
}

void dump_instance(const std::string& dir, const std::string& id, int trial, const Instance& inst) {
  namespace fs = std::filesystem;
  fs::create_directories(dir);
  const std::string stem = id + "_t" + std::to_string(trial);
  write_matrix_file(fs::path(dir) / (stem + "_A.txt"), inst.a.matrix());
  if (inst.b) write_matrix_file(fs::path(dir) / (stem + "_B.txt"), inst.b->matrix());
}

std::ostream& summary_stream(const Options& o, std::ostream& out, std::ostream& err) {
  return o.out.empty() ? err : out;
}

int cmd_check(const Options& o, std::ostream& out, std::ostream& err) {
  const ToleranceConfig tol = tolerances(o);
  const std::uint64_t seed = resolve_seed(o);
  const TrialSpec spec = build_single_spec(o, seed, tol);
  const bool fixed = spec.fixed_a || spec.fixed_b;
  const std::vector<TrialOutcome> outcomes = run_trials_parallel(spec, o.jobs);

  Sink sink(o, out);
  RunSummary summary;
  for (const TrialOutcome& t : outcomes) {
    if (!t.error.empty()) {
      err << "trial " << t.trial << ": " << to_string(t.error_kind) << ": " << t.error << '\n';
      if (fixed) return kExitUsage;
    }
    for (const InequalityReport& r : t.reports) sink.write(r);
    if (!o.dump.empty() && t.error.empty()) dump_instance(o.dump, spec.ineq_id, t.trial, t.instance);
    summary.add(spec.ineq_id, t);
  }
  summary_stream(o, out, err) << summary.format();
  return summary.failed() ? kExitViolation : kExitOk;
}

int cmd_falsify(const Options& o, std::ostream& out, std::ostream& err) {
  const ToleranceConfig tol = tolerances(o);
  const std::uint64_t seed = resolve_seed(o);
  const TrialSpec spec = build_single_spec(o, seed, tol);
  const IneqInfo& info = lookup(spec.ineq_id);
  const FalsifyResult res = falsify(spec, o.budget);

  Sink sink(o, out);
  sink.write(res.best);
  if (!o.dump.empty()) dump_instance(o.dump, spec.ineq_id, res.best.trial, res.witness);
  std::ostringstream s;
  s << "falsify " << spec.ineq_id << ": evaluations " << res.evaluations << ", restarts "
    << res.restarts << ", best scaled gap " << format_double(res.objective) << ", "
    << (res.best.holds ? "holds" : "violated") << '\n';
  summary_stream(o, out, err) << s.str();
  if (info.guaranteed && !res.best.holds) return kExitViolation;
  if (info.expects_violation && res.best.holds) return kExitViolation;
  return kExitOk;
}

int cmd_suite(const Options& o, std::ostream& out, std::ostream& err) {
  SuiteConfig cfg;
  cfg.tol = tolerances(o);
  cfg.seed = resolve_seed(o);
  cfg.dims = o.grid_n;
  cfg.partitions = o.grid_partition;
  cfg.maps = o.grid_map;
  cfg.functions = o.fns;
  cfg.ids = o.ineqs;
  cfg.trials = o.trials;
  cfg.mode = parse_mode(o.mode);
  cfg.lambda = o.lambda;
  cfg.spectrum_lo = o.spectrum_lo;
  cfg.spectrum_hi = o.spectrum_hi;
  const std::vector<TrialSpec> cells = suite_cells(cfg);

  Sink sink(o, out);
  RunSummary summary;
  for (const TrialSpec& cell : cells) {
    for (const TrialOutcome& t : run_trials_parallel(cell, o.jobs)) {
      if (!t.error.empty()) {
        err << cell.ineq_id << " trial " << t.trial << ": " << to_string(t.error_kind) << ": "
            << t.error << '\n';
      }
      for (const InequalityReport& r : t.reports) sink.write(r);
      summary.add(cell.ineq_id, t);
    }
  }
  std::ostream& s = summary_stream(o, out, err);
  s << "suite: " << cells.size() << " cells, " << cfg.trials << " trials each, mode "
    << to_string(cfg.mode) << '\n'
    << summary.format();
  return summary.failed() ? kExitViolation : kExitOk;
}

int cmd_demo(const Options& o, std::ostream& out, std::ostream& err) {
  const ToleranceConfig tol = tolerances(o);
  const std::uint64_t seed = resolve_seed(o);
  Sink sink(o, out);
  std::ostringstream s;
  bool failed = false;
  char line[160];

  s << "Gaussian entropy sub-additivity, 2x2 correlation matrices (nats)\n";
  std::snprintf(line, sizeof line, "%8s %18s %18s\n", "rho", "entropy deficit", "-ln(1-rho^2)/2");
  s << line;
  const BlockPartition split = BlockPartition::diagonal(2);
  int trial = 0;
  for (double rho : {0.0, 0.25, 0.5, 0.75, 0.9, 0.99}) {
    ComplexMatrix m(2, 2);
    m << 1.0, rho, rho, 1.0;
    InequalityReport r = verify_gaussian_entropy(HermitianMatrix::from(m), split, tol);
    r.trial = trial++;
    r.n = 2;
    r.partition = split.to_string();
    r.notes = "rho=" + format_double(rho);
    sink.write(r);
    failed = failed || !r.holds;
    std::snprintf(line, sizeof line, "%8.2f %18.12f %18.12f\n", rho, r.gap,
                  -0.5 * std::log1p(-rho * rho));
    s << line;
  }

  TrialSpec spec;
  spec.ineq_id = std::string(ineq::kGaussianEntropy);
  spec.seed = seed;
  spec.trials = 5;
  spec.ctx.n = o.n;
  spec.ctx.partition = BlockPartition::parse(o.partition, o.n);
  spec.ctx.tol = tol;
  s << "random covariances, n = " << o.n << ", blocks " << spec.ctx.partition.to_string() << '\n';
  for (const TrialOutcome& t : run_trials_serial(spec)) {
    if (!t.error.empty()) {
      err << "trial " << t.trial << ": " << t.error << '\n';
      failed = true;
      continue;
    }
    for (InequalityReport r : t.reports) {
      r.trial += trial;
      sink.write(r);
      failed = failed || !r.holds;
      std::snprintf(line, sizeof line, "  trial %d: h(whole) = %.6f, sum h(blocks) = %.6f\n",
                    t.trial, r.lhs, r.rhs);
      s << line;
    }
  }
  summary_stream(o, out, err) << s.str();
  return failed ? kExitViolation : kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fuglede-Kadison determinant and operator inequality checks", "fkineq"};
  app.require_subcommand(1);
  Options o;

  CLI::App* check = app.add_subcommand("check", "Run seeded trials of one inequality");
  add_common(check, o);
  add_single(check, o);
  check->add_option("--trials", o.trials, "Number of trials")->check(CLI::NonNegativeNumber);
  check->add_option("--mode", o.mode, "Instance class")
      ->check(CLI::IsMember({"generic", "in-clause", "out-of-clause"}));
  check->add_option("--jobs", o.jobs, "Worker threads (0: OpenMP default)");

  CLI::App* falsify_cmd = app.add_subcommand("falsify", "Search for a counterexample");
  add_common(falsify_cmd, o);
  add_single(falsify_cmd, o);
  falsify_cmd->add_option("--budget", o.budget, "Evaluations")->check(CLI::NonNegativeNumber);

  CLI::App* suite = app.add_subcommand("suite", "Run every inequality over a grid");
  add_common(suite, o);
  const std::size_t any = CLI::detail::expected_max_vector_size;
  suite->add_option("--ineq", o.ineqs, "Restrict to these ids")->expected(1, any);
  suite->add_option("--fn", o.fns, "Replace the default function sets")->expected(1, any);
  suite->add_option("--trials", o.trials, "Trials per cell")->check(CLI::NonNegativeNumber);
  suite->add_option("--mode", o.mode, "Instance class")
      ->check(CLI::IsMember({"generic", "in-clause", "out-of-clause"}));
  suite->add_option("--jobs", o.jobs, "Worker threads (0: OpenMP default)");
  suite->add_option("--grid-n", o.grid_n, "Dimensions")->expected(0, any);
  suite->add_option("--grid-partition", o.grid_partition, "Partitions")->expected(0, any);
  suite->add_option("--grid-map", o.grid_map, "Maps for map-based ids")->expected(0, any);

  CLI::App* demo = app.add_subcommand("demo", "Gaussian entropy sub-additivity demo");
  add_common(demo, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }
  CLI::App* active = app.get_subcommands().front();
  const auto given = [active](const char* flag) {
    const CLI::Option* opt = active->get_option_no_throw(flag);
    return opt != nullptr && opt->count() > 0;
  };
  o.n_given = given("--n");
  o.seed_given = given("--seed");
  o.map_given = given("--map");
  // Suites default to 200 trials per cell.
  if (active == suite && !given("--trials")) o.trials = 200;

  try {
    if (check->parsed()) return cmd_check(o, out, err);
    if (falsify_cmd->parsed()) return cmd_falsify(o, out, err);
    if (suite->parsed()) return cmd_suite(o, out, err);
    return cmd_demo(o, out, err);
  } catch (const Error& e) {
    err << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("fkineq");
  for (const std::string& a : args) argv.push_back(a.c_str());
  return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace fkineq
