/*
 * Copyright 2026 The ponplan Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <benchmark/benchmark.h>

#include <vector>

#include "ponplan/mc_engine.hpp"
#include "ponplan/planner.hpp"
#include "ponplan/tech_catalog.hpp"
#include "ponplan/zipf_model.hpp"

using namespace ponplan;

static void BM_SimulateAggregate(benchmark::State& state) {
  const ZipfPopulation pop(100, 1.0, 8.8);
  ScenarioConfig config;
  config.split_n = static_cast<int>(state.range(0));
  config.trials = 100000;
  for (auto _ : state) {
    benchmark::DoNotOptimize(simulate_aggregate(pop, config));
  }
  state.SetItemsProcessed(state.iterations() * config.trials);
}
BENCHMARK(BM_SimulateAggregate)->Arg(4)->Arg(64)->Arg(1024)->Unit(benchmark::kMillisecond);

static void BM_SplitLadder(benchmark::State& state) {
  const ZipfPopulation pop(100, 1.0, 1.18);
  ScenarioConfig config;
  config.trials = 100000;
  const std::vector<int> splits{4, 8, 16, 32, 64, 128, 256, 512, 1024};
  for (auto _ : state) {
    benchmark::DoNotOptimize(simulate_split_ladder(pop, splits, config));
  }
}
BENCHMARK(BM_SplitLadder)->Unit(benchmark::kMillisecond);

static void BM_BootstrapCi(benchmark::State& state) {
  const ZipfPopulation pop(100, 1.0, 8.8);
  ScenarioConfig config;
  config.split_n = 64;
  config.trials = static_cast<std::size_t>(state.range(0));
  const auto trials = simulate_aggregate(pop, config);
  for (auto _ : state) {
    benchmark::DoNotOptimize(bootstrap_ci(trials, 0.99, 1000, 0.95, config.seed));
  }
}
BENCHMARK(BM_BootstrapCi)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);

static void BM_BuildSchedule(benchmark::State& state) {
  const auto catalog = builtin_catalog();
  std::vector<int> years;
  for (int y = 2016; y <= 2040; ++y) years.push_back(y);
  ScenarioConfig config;
  config.trials = 20000;
  config.bootstrap_reps = 200;
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_schedule(catalog, years, ForecastParams{}, PlanningPolicy{}, config));
  }
}
BENCHMARK(BM_BuildSchedule)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
