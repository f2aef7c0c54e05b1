// Serial vs OpenMP subset DP for exact path-width on random tournaments.

#include <benchmark/benchmark.h>

#include "dminor/digraph.hpp"
#include "dminor/pathwidth.hpp"

namespace {

void BM_TableSerial(benchmark::State& state) {
  const auto g = dminor::random_tournament(static_cast<int>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(dminor::pathwidth_table_serial(g));
  state.SetComplexityN(state.range(0));
}

void BM_TableParallel(benchmark::State& state) {
  const auto g = dminor::random_tournament(static_cast<int>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(dminor::pathwidth_table_parallel(g));
  state.SetComplexityN(state.range(0));
}

void BM_ExactSerial(benchmark::State& state) {
  const auto g = dminor::random_tournament(static_cast<int>(state.range(0)), 11);
  for (auto _ : state) benchmark::DoNotOptimize(dminor::exact_pathwidth_serial(g).width);
}

void BM_ExactParallel(benchmark::State& state) {
  const auto g = dminor::random_tournament(static_cast<int>(state.range(0)), 11);
  for (auto _ : state) benchmark::DoNotOptimize(dminor::exact_pathwidth(g).width);
}

}  // namespace

BENCHMARK(BM_TableSerial)->DenseRange(12, 20, 4)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_TableParallel)->DenseRange(12, 20, 4)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_ExactSerial)->Arg(18)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_ExactParallel)->Arg(18)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
