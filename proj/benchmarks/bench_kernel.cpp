#include <benchmark/benchmark.h>

#include "fdroof/equation_catalog.hpp"
#include "fdroof/fd_stencil.hpp"
#include "fdroof/reference_kernel.hpp"

namespace {

fdroof::KernelConfig make_config(int order, int n) {
  fdroof::KernelConfig cfg;
  cfg.order = order;
  cfg.dims = {n, n, n};
  cfg.h = 1.0;
  cfg.dt = 0.9 * fdroof::kernel_cfl_limit(cfg);
  return cfg;
}

// Reports the kernel's achieved FLOP rate with the analytic per-point count.
void BM_AcousticStep(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  const int n = static_cast<int>(state.range(1));
  const auto cfg = make_config(order, n);
  fdroof::Wavefield field = fdroof::make_wavefield(cfg);
  field.set_initial(n / 2, n / 2, n / 2, 1.0f);

  for (auto _ : state) {
    fdroof::step(field, cfg);
    benchmark::DoNotOptimize(field.current().data());
  }
  const auto acoustic = fdroof::builtin_equations().front();
  const double flops = static_cast<double>(
      fdroof::kernel_flops(acoustic, fdroof::stencil_size_for_order(order)));
  state.counters["FLOPS"] = benchmark::Counter(
      flops * static_cast<double>(field.interior_points()),
      benchmark::Counter::kIsIterationInvariantRate);
  state.counters["OI"] = fdroof::operational_intensity(acoustic, order + 1).oi;
}

BENCHMARK(BM_AcousticStep)
    ->Args({2, 64})
    ->Args({8, 64})
    ->Args({16, 64})
    ->Args({8, 128})
    ->Unit(benchmark::kMillisecond);

}  // namespace
