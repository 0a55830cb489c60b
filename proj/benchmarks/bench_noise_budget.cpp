#include <benchmark/benchmark.h>

#include "zigzag/noise_budget.hpp"

namespace {

using namespace zigzag;

void BM_TotalBudget(benchmark::State& state) {
  const NoiseParams p;
  const auto grid = log_grid(0.1, 1000.0, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(total_budget(p, grid));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_TotalBudget)->Arg(400)->Arg(10000);

}  // namespace
