// Serial reference against the OpenMP kernels.

#include <benchmark/benchmark.h>

#include "curvesing/curve.hpp"
#include "curvesing/oracle.hpp"
#include "curvesing/semigroup.hpp"
#include "curvesing/zeta_global.hpp"

using namespace curvesing;

namespace {

struct OracleCase {
    CurveGerm germ;
    ValueSemigroup semigroup;
};

OracleCase oracle_case(int which) {
    static const char* texts[] = {"y^2 - x^3", "x*y", "y^2 - x^4"};
    CurveGerm g(reduce_mod_p(parse_curve(texts[which]), 3));
    return {g, value_semigroup(g)};
}

void BM_OracleSerial(benchmark::State& state) {
    const OracleCase c = oracle_case(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(brute_force_ideal_counts_serial(c.germ, c.semigroup.conductor, 7, 1'000'000'000));
}

void BM_OracleParallel(benchmark::State& state) {
    const OracleCase c = oracle_case(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(brute_force_ideal_counts(c.germ, c.semigroup.conductor, 7, 1'000'000'000));
}

void BM_PointCountSerial(benchmark::State& state) {
    const GlobalCurve X(reduce_mod_p(parse_curve("y^2 - x^3 - x - 1"), 5));
    for (auto _ : state) benchmark::DoNotOptimize(count_points_over(X, static_cast<int>(state.range(0)), false));
}

void BM_PointCountParallel(benchmark::State& state) {
    const GlobalCurve X(reduce_mod_p(parse_curve("y^2 - x^3 - x - 1"), 5));
    for (auto _ : state) benchmark::DoNotOptimize(count_points_over(X, static_cast<int>(state.range(0)), true));
}

} // namespace

BENCHMARK(BM_OracleSerial)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OracleParallel)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PointCountSerial)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PointCountParallel)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
