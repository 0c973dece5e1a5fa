#include <benchmark/benchmark.h>

#include "gwbinom/necklace.hpp"

namespace nk = gwbinom::necklace;

static void BM_Parallel(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(nk::enumerate_orbits(n, n / 2));
}

static void BM_Serial(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(nk::reference::enumerate_orbits(n, n / 2));
}

BENCHMARK(BM_Parallel)->DenseRange(12, 20, 4)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_Serial)->DenseRange(12, 20, 4)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
