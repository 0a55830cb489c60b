#include <benchmark/benchmark.h>

#include "zigzag/sensing_range.hpp"

namespace {

using namespace zigzag;

void BM_OverlapQuadrature(benchmark::State& state) {
  double dtheta = 1e-3;
  for (auto _ : state) {
    benchmark::DoNotOptimize(coupling_efficiency(dtheta, 0.504, 73e-6, 780e-9));
    dtheta = dtheta == 1e-3 ? 1.1e-3 : 1e-3;
  }
}
BENCHMARK(BM_OverlapQuadrature);

void BM_OneOverEYaw(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(one_over_e_yaw(0.504, 73e-6, 780e-9));
}
BENCHMARK(BM_OneOverEYaw);

}  // namespace
