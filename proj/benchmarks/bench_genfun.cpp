#include "rootcount/genfun.hpp"
#include "rootcount/partitions.hpp"

#include <benchmark/benchmark.h>

namespace {

using rootcount::GroupFamily;

void BM_RootProportion(benchmark::State& state, GroupFamily family, std::int64_t q,
                       std::int64_t M) {
  const auto N = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(rootcount::gf_root_proportion(family, q, M, N));
  }
}

BENCHMARK_CAPTURE(BM_RootProportion, gl_q3_m12, GroupFamily::GL, 3, 12)->Arg(8)->Arg(16)->Arg(24);
BENCHMARK_CAPTURE(BM_RootProportion, sp_q5_m10, GroupFamily::Sp, 5, 10)->Arg(8)->Arg(16)->Arg(24);
BENCHMARK_CAPTURE(BM_RootProportion, u_q3_m8, GroupFamily::U, 3, 8)->Arg(8)->Arg(16);
BENCHMARK_CAPTURE(BM_RootProportion, osum_q3_m6, GroupFamily::OrthoSum, 3, 6)->Arg(8)->Arg(16);

void BM_SemisimpleOnly(benchmark::State& state) {
  const auto N = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(rootcount::gf_root_proportion(GroupFamily::GL, 7, 48, N, true));
  }
}
BENCHMARK(BM_SemisimpleOnly)->Arg(16)->Arg(32)->Arg(48);

void BM_ClosedForm(benchmark::State& state) {
  const auto n = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(rootcount::closed_form_prime_case(GroupFamily::GL, n, 13, 7));
  }
}
BENCHMARK(BM_ClosedForm)->Arg(8)->Arg(16)->Arg(24);

void BM_SignedPartitions(benchmark::State& state) {
  const auto n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        rootcount::gen_signed(rootcount::SignedKind::Symplectic, n, n));
  }
}
BENCHMARK(BM_SignedPartitions)->Arg(8)->Arg(14);

}  // namespace
