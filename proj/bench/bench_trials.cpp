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

// Serial reference runner against the OpenMP runner on one trial batch.

#include <benchmark/benchmark.h>

#include "fkineq/trials.hpp"

namespace {

fkineq::TrialSpec batch(int n) {
  fkineq::TrialSpec spec;
  spec.ineq_id = "matic2";
  spec.ctx.n = n;
  spec.ctx.partition = fkineq::BlockPartition::halves(n);
  spec.trials = 200;
  spec.seed = 1;
  return spec;
}

void BM_Serial(benchmark::State& state) {
  const fkineq::TrialSpec spec = batch(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(fkineq::run_trials_serial(spec));
  state.SetItemsProcessed(state.iterations() * spec.trials);
}

void BM_Parallel(benchmark::State& state) {
  const fkineq::TrialSpec spec = batch(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(fkineq::run_trials_parallel(spec));
  state.SetItemsProcessed(state.iterations() * spec.trials);
}

BENCHMARK(BM_Serial)->Arg(4)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Parallel)->Arg(4)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
