#include "rootcount/oracle.hpp"

#include <benchmark/benchmark.h>

namespace {

using rootcount::GroupFamily;

void BM_Enumerate(benchmark::State& state, GroupFamily family, int dim, std::int64_t q) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(rootcount::enumerate_group(family, dim, q).order());
  }
}

BENCHMARK_CAPTURE(BM_Enumerate, gl2_q5, GroupFamily::GL, 2, 5);
BENCHMARK_CAPTURE(BM_Enumerate, gl3_q3, GroupFamily::GL, 3, 3)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Enumerate, sp4_q3, GroupFamily::Sp, 4, 3)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Enumerate, u2_q3, GroupFamily::U, 2, 3);

void BM_CountRoots(benchmark::State& state) {
  const auto group = rootcount::enumerate_group(GroupFamily::GL, 3, 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(rootcount::count_mth_roots(group, state.range(0)));
  }
}
BENCHMARK(BM_CountRoots)->Arg(2)->Arg(12)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
