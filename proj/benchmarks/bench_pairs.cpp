#include <benchmark/benchmark.h>

#include "padiq/pairs.hpp"

using namespace padiq;

static void BM_profile(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(profile(10007, 10009));
}
BENCHMARK(BM_profile);

static void BM_search_pattern(benchmark::State& state) {
    const auto pattern = PatternQuery::parse("**TT");
    for (auto _ : state)
        benchmark::DoNotOptimize(search_pattern(pattern, state.range(0), state.range(1)));
}
BENCHMARK(BM_search_pattern)
    ->Args({2000, 1})
    ->Args({2000, 4})
    ->Args({10000, 1})
    ->Unit(benchmark::kMillisecond);

static void BM_sieve_witnesses(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(sieve_witnesses(213623, 500));
}
BENCHMARK(BM_sieve_witnesses)->Unit(benchmark::kMillisecond);
