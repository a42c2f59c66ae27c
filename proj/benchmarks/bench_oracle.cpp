#include <benchmark/benchmark.h>

#include "padiq/families.hpp"
#include "padiq/oracle.hpp"

using namespace padiq;

static void BM_coverage_squares(benchmark::State& state) {
    auto sample = enumerate_power_sums(2, 2, state.range(0));
    PrimePower pp(13, 2);
    for (auto _ : state) benchmark::DoNotOptimize(coverage_check(sample, pp, 2));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_coverage_squares)->Arg(10000)->Arg(100000)->Complexity();

static void BM_coverage_union(benchmark::State& state) {
    PrimePower pp(19, 2);
    auto sample = family_sample(PrimePowerUnion{19, 2}, pp, 2, 10000);
    for (auto _ : state) benchmark::DoNotOptimize(coverage_check(sample, pp, 2));
}
BENCHMARK(BM_coverage_union);

static void BM_verify_certificate(benchmark::State& state) {
    auto sample = enumerate_power_sums(2, 2, 100000);
    ValuationObstruction cert{7, 2, 0};
    for (auto _ : state)
        benchmark::DoNotOptimize(verify_certificate(cert, sample, 1u << 24));
}
BENCHMARK(BM_verify_certificate);
