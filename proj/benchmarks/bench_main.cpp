#include <benchmark/benchmark.h>

#include <numbers>

#include "lenscoupled/coupling.hpp"
#include "lenscoupled/dynamics.hpp"
#include "lenscoupled/greens.hpp"

namespace lg = lenscoupled::greens;
namespace lc = lenscoupled::coupling;
namespace ld = lenscoupled::dynamics;

static void BM_PsfIntegrals(benchmark::State& state) {
  const double rho = static_cast<double>(state.range(0)) / 4.0;
  const lg::FocalCoords fc{rho, 0.3, 0.9};
  for (auto _ : state) benchmark::DoNotOptimize(lg::psf_integrals(fc, 2.0 * std::numbers::pi, std::numbers::pi / 3));
}
BENCHMARK(BM_PsfIntegrals)->Arg(0)->Arg(4)->Arg(20)->Arg(60);

static void BM_LindbladSolve(benchmark::State& state) {
  const auto drive = ld::DriveSpec::from_saturation(0.05, 0.2);
  for (auto _ : state) benchmark::DoNotOptimize(ld::lindblad_steady_state(0.4, -0.15, drive, 1.0));
}
BENCHMARK(BM_LindbladSolve);

static void BM_AnalyticSteadyState(benchmark::State& state) {
  const auto drive = ld::DriveSpec::from_saturation(0.05, 0.2);
  for (auto _ : state) benchmark::DoNotOptimize(ld::steady_state_analytic({0.4, -0.075}, drive, 1.0));
}
BENCHMARK(BM_AnalyticSteadyState);

static void BM_CouplingMap(benchmark::State& state) {
  lc::MapGrid grid;
  grid.resolution = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(lc::coupling_map(lc::Axis::x, lc::Axis::x, lc::Plane::xz, grid, {}));
  state.SetItemsProcessed(state.iterations() * grid.resolution * grid.resolution);
}
BENCHMARK(BM_CouplingMap)->Arg(21)->Arg(51)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
