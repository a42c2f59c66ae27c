#include <benchmark/benchmark.h>

#include "padiq/families.hpp"
#include "padiq/lucas.hpp"
#include "padiq/padic.hpp"

using namespace padiq;

static void BM_vp_rational(benchmark::State& state) {
    Rational x(Int(45) * 45 * 45 * 45 * 7, Int(250) * 250);
    for (auto _ : state) benchmark::DoNotOptimize(vp(x, 5));
}
BENCHMARK(BM_vp_rational);

static void BM_unit_part(benchmark::State& state) {
    PrimePower pp(13, 2);
    Rational x(Int("123456789123456789"), Int(169) * 49);
    for (auto _ : state) benchmark::DoNotOptimize(unit_part(x, pp));
}
BENCHMARK(BM_unit_part);

static void BM_vp_first_kind(benchmark::State& state) {
    auto fib = lucas_params(1, 1);
    std::uint64_t n = 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(vp_first_kind(fib, 7, n));
        n = n % 300 + 1;
    }
}
BENCHMARK(BM_vp_first_kind);

static void BM_lift_two_squares(benchmark::State& state) {
    Int n = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(lift_two_squares(n, 13, 6));
        n = (n + 1) % 4826809;
    }
}
BENCHMARK(BM_lift_two_squares);

static void BM_enumerate_power_sums(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(enumerate_power_sums(2, 2, state.range(0)));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_enumerate_power_sums)->Arg(10000)->Arg(100000)->Complexity();
