// Serial reference sweep vs the OpenMP fan-out over frame pairs.

#include <benchmark/benchmark.h>

#include "pries/sweep.hpp"

namespace {

void BM_SweepSerial(benchmark::State& state) {
  const auto instances = pries::sweep_instances(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(pries::sweep_jt_serial(instances).totals);
  state.counters["pairs"] = static_cast<double>(instances.size());
}

void BM_SweepParallel(benchmark::State& state) {
  const auto instances = pries::sweep_instances(static_cast<std::size_t>(state.range(0)));
  const int threads = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(pries::sweep_jt_parallel(instances, threads).totals);
  state.counters["pairs"] = static_cast<double>(instances.size());
}

}  // namespace

BENCHMARK(BM_SweepSerial)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepParallel)->Args({3, 1})->Args({3, 2})->Args({4, 1})->Args({4, 2})->Args({4, 4})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
