#include <benchmark/benchmark.h>

#include "fdroof/cost_to_solution.hpp"
#include "fdroof/equation_catalog.hpp"
#include "fdroof/fd_stencil.hpp"
#include "fdroof/machine_model.hpp"

static void BM_FdWeights(benchmark::State& state) {
  const int accuracy = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto w = fdroof::fd_weights(2, accuracy);
    benchmark::DoNotOptimize(w.weights.data());
  }
}
BENCHMARK(BM_FdWeights)->Arg(2)->Arg(8)->Arg(24)->Arg(32);

static void BM_CostTable(benchmark::State& state) {
  const fdroof::CostScenario sc;
  const auto machines = fdroof::builtin_machines();
  const auto acoustic = fdroof::builtin_equations().front();
  for (auto _ : state) {
    auto t = fdroof::scenario_table(sc, {2, 6, 12, 18, 24}, machines, acoustic);
    benchmark::DoNotOptimize(t.rows.data());
  }
}
BENCHMARK(BM_CostTable);
BENCHMARK_MAIN();
