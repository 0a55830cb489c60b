#include <benchmark/benchmark.h>

#include <vector>

#include "zigzag/constants.hpp"
#include "zigzag/raytrace.hpp"
#include "zigzag/sensitivity.hpp"

namespace {

using namespace zigzag;

const CavityConfig kCavity{24.8e-3, 50e-3, 780e-9, 880.0, 230.0, {}};

PendulumSpec bar() { return {11e-3, 1e-3, 0.0, 6e-6, 0.2 * constants::deg, 0.1 * constants::deg}; }

PendulumPose design() {
  PendulumPose p;
  p.yaw = 8.5 * constants::deg;
  p.pitch = 1e-3;
  return p;
}

void BM_SolveSeeded(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(solve_zigzag_path(kCavity, bar(), design()));
}
BENCHMARK(BM_SolveSeeded);

void BM_SolveWithGuess(benchmark::State& state) {
  const RayPath guess = solve_zigzag_path(kCavity, bar(), design());
  const PendulumPose moved = apply_offset(design(), Dof::yaw, 1e-6);
  for (auto _ : state) benchmark::DoNotOptimize(solve_zigzag_path(kCavity, bar(), moved, guess));
}
BENCHMARK(BM_SolveWithGuess);

void BM_YawSweep(benchmark::State& state) {
  std::vector<double> grid;
  for (int i = 0; i < state.range(0); ++i) grid.push_back(-1.5e-6 + 3e-6 * i / (state.range(0) - 1));
  for (auto _ : state) benchmark::DoNotOptimize(sweep(kCavity, bar(), design(), Dof::yaw, grid));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_YawSweep)->Arg(31)->Arg(301);

void BM_FiniteDifferenceReport(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(finite_difference_sensitivities(kCavity, bar(), design()));
  }
}
BENCHMARK(BM_FiniteDifferenceReport);

}  // namespace
