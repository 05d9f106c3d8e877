// Serial reference vs OpenMP kernels.

#include <benchmark/benchmark.h>

#include "ncard/oracle.hpp"
#include "ncard/report.hpp"

namespace {

void BM_EnumerateSerial(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ncard::enumerate_counts_serial(ncard::CardSet::full_deck(), n));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(ncard::binomial(52, n).to_u64()));
}
BENCHMARK(BM_EnumerateSerial)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_EnumerateParallel(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ncard::enumerate_counts(ncard::CardSet::full_deck(), n));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(ncard::binomial(52, n).to_u64()));
}
BENCHMARK(BM_EnumerateParallel)->Arg(5)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

void BM_TableSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(ncard::build_table_serial());
}
BENCHMARK(BM_TableSerial)->Unit(benchmark::kMillisecond);

void BM_TableParallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(ncard::build_table());
}
BENCHMARK(BM_TableParallel)->Unit(benchmark::kMillisecond);

void BM_MonteCarlo(benchmark::State& state) {
  const auto workers = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(ncard::monte_carlo(ncard::HandSize(13), ncard::Category::kStraight, 200000, 1, workers));
  }
  state.SetItemsProcessed(state.iterations() * 200000);
}
BENCHMARK(BM_MonteCarlo)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
