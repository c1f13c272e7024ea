// Serial reference vs OpenMP kernels for the temperature sweep and the
// cutoff lambda sweep.
#include <benchmark/benchmark.h>

#include <vector>

#include "casimir/oracle.hpp"
#include "casimir/sweep.hpp"

namespace {

using namespace casimir;

std::vector<ThermalPoint> grid(const ThermalSetup& setup, int n) {
  std::vector<ThermalPoint> pts;
  for (double x : sweep_grid(0.02, 20.0, n, true))
    pts.push_back(ThermalPoint::from_reduced(x, setup.g00_origin, setup.geometry.L_p));
  return pts;
}

void thermal_sweep(benchmark::State& state, Execution exec) {
  const ThermalSetup setup = make_thermal_setup(MetricModel::minkowski(), CavitySpec{});
  const auto pts = grid(setup, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(evaluate_sweep(setup, pts, SeriesControl{}, exec));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void cutoff_sweep(benchmark::State& state, Execution exec) {
  std::vector<double> lambdas;
  const int n = static_cast<int>(state.range(0));
  for (int i = 0; i < n; ++i) lambdas.push_back(0.1 - 0.09 * i / (n - 1));
  for (auto _ : state)
    benchmark::DoNotOptimize(oracle::cutoff_casimir_energy_per_area(1.0, lambdas, exec));
}

}  // namespace

BENCHMARK_CAPTURE(thermal_sweep, serial, Execution::serial)->Arg(256)->Arg(4096);
BENCHMARK_CAPTURE(thermal_sweep, parallel, Execution::parallel)->Arg(256)->Arg(4096);
BENCHMARK_CAPTURE(cutoff_sweep, serial, Execution::serial)->Arg(8)->Arg(32);
BENCHMARK_CAPTURE(cutoff_sweep, parallel, Execution::parallel)->Arg(8)->Arg(32);

BENCHMARK_MAIN();
