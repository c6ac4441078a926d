// Copyright 2026 The mrenewal Authors
// SPDX-License-Identifier: Apache-2.0

// Serial reference vs OpenMP kernels. Run with --benchmark_counters_tabular=true.

#include <benchmark/benchmark.h>

#include <vector>

#include "mrenewal/invert.hpp"
#include "mrenewal/mcsim.hpp"
#include "mrenewal/sweep.hpp"

using namespace mrenewal;

namespace {

const QueueParams kParams(2.0, 1.0);

void BM_Simulate(benchmark::State& state, Execution exec) {
  const int targets[] = {0, 1, 2};
  const std::vector<double> ts = {0.5, 1.0, 2.0, 4.0};
  SimConfig cfg;
  cfg.n_paths = state.range(0);
  cfg.t_max = 4.0;
  cfg.workers = exec == Execution::parallel ? int(state.range(1)) : 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(simulate_renewal_counts(0, targets, ts, kParams, cfg, exec));
  }
  state.SetItemsProcessed(state.iterations() * cfg.n_paths);
}

void BM_TransformSweep(benchmark::State& state, Execution exec) {
  std::vector<double> grid;
  for (int k = 1; k <= state.range(0); ++k) grid.push_back(0.05 * k);
  const int workers = exec == Execution::parallel ? int(state.range(1)) : 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        transform_sweep(3, 2, grid, kParams, TransformSolver::both, {}, exec, workers));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_RenewalFunction(benchmark::State& state, Execution exec) {
  std::vector<double> ts;
  for (int k = 1; k <= state.range(0); ++k) ts.push_back(0.1 * k);
  const int workers = exec == Execution::parallel ? int(state.range(1)) : 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        renewal_function(0, 1, ts, kParams, Solver::oracle, {}, exec, workers));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

BENCHMARK_CAPTURE(BM_Simulate, serial, Execution::serial)->Args({100'000, 1})->UseRealTime()->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Simulate, omp, Execution::parallel)
    ->ArgsProduct({{100'000}, {1, 2, 4, 8}})
    ->UseRealTime()->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_TransformSweep, serial, Execution::serial)->Args({200, 1})->UseRealTime()->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_TransformSweep, omp, Execution::parallel)
    ->ArgsProduct({{200}, {1, 2, 4, 8}})
    ->UseRealTime()->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_RenewalFunction, serial, Execution::serial)->Args({40, 1})->UseRealTime()->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_RenewalFunction, omp, Execution::parallel)
    ->ArgsProduct({{40}, {1, 2, 4, 8}})
    ->UseRealTime()->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
