#include <benchmark/benchmark.h>

#include "ecw/arith.hpp"
#include "ecw/descent2.hpp"
#include "ecw/descent3.hpp"
#include "ecw/stats.hpp"

using namespace ecw;

static void BM_Factor(benchmark::State& state) {
  set_factor_cache_enabled(false);
  const Integer n = Integer(1000003) * 999983 * 4 * 27;
  for (auto _ : state) benchmark::DoNotOptimize(factor(n));
  set_factor_cache_enabled(true);
}
BENCHMARK(BM_Factor);

static void BM_PadicSoluble(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(padic_soluble({3, 14, -11}, 2));
}
BENCHMARK(BM_PadicSoluble);

static void BM_RankUpper(benchmark::State& state) {
  const E2Param p{state.range(0), 3 * state.range(0) + 7};
  for (auto _ : state) benchmark::DoNotOptimize(rank_upper(p));
}
BENCHMARK(BM_RankUpper)->Arg(11)->Arg(101)->Arg(1001);

static void BM_R3Imaginary(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(r3_imaginary(-state.range(0)));
}
BENCHMARK(BM_R3Imaginary)->Arg(3299)->Arg(99999)->Arg(1000003);

static void BM_CountR2(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(count_r2(static_cast<std::uint64_t>(state.range(0))));
}
BENCHMARK(BM_CountR2)->Arg(50)->Arg(100);

static void BM_AvgFrobenius(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(avg_frobenius(FrobeniusFamily::E5, static_cast<std::uint64_t>(state.range(0))));
}
BENCHMARK(BM_AvgFrobenius)->Arg(101)->Arg(199);
BENCHMARK_MAIN();
