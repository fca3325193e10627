#include <benchmark/benchmark.h>

#include "hca/coeffs.hpp"
#include "hca/loop.hpp"
#include "hca/oracle.hpp"
#include "hca/parse.hpp"
#include "hca/routes.hpp"

using namespace hca;

static void BM_HexicTableFill(benchmark::State& state) {
    CurveSpec hexic = parse_curve("t^6 - 2*b*t^3 + 1");
    for (auto _ : state) {
        CoeffTables tables(hexic);
        benchmark::DoNotOptimize(tables.p(state.range(0), -1));
    }
}
BENCHMARK(BM_HexicTableFill)->Arg(32)->Arg(64)->Arg(128);

static void BM_SeriesProduct(benchmark::State& state) {
    CoeffTables tables(parse_curve("t^6 - 2*b*t^3 + 1"));
    HalfGridSeries a = p_series(tables, -1, state.range(0));
    HalfGridSeries b = p_series(tables, -2, state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_SeriesProduct)->Arg(16)->Arg(32)->Arg(64);

static void BM_IntegralRoute(benchmark::State& state) {
    CoeffTables tables(parse_curve("t^6 - 2*b*t^3 + 1"));
    for (auto _ : state)
        benchmark::DoNotOptimize(integral_p_series(-1, state.range(0), tables));
}
BENCHMARK(BM_IntegralRoute)->Arg(16)->Arg(24)->Arg(32);

static void BM_OracleBuild(benchmark::State& state) {
    CurveSpec hexic = parse_curve("t^6 - 2*b*t^3 + 1");
    ReductionWindow window{state.range(0), {{"b", Rational(2)}}};
    for (auto _ : state) {
        KaehlerOracle oracle(hexic, window);
        benchmark::DoNotOptimize(oracle.quotient_dimension());
    }
}
BENCHMARK(BM_OracleBuild)->Arg(18)->Arg(24)->Arg(30);

static void BM_OracleReduce(benchmark::State& state) {
    CurveSpec hexic = parse_curve("t^6 - 2*b*t^3 + 1");
    KaehlerOracle oracle(hexic, {24, {{"b", Rational(2)}}});
    for (auto _ : state) {
        for (long k = -18; k <= 18; ++k)
            benchmark::DoNotOptimize(oracle.reduce_monomial(k, true));
    }
}
BENCHMARK(BM_OracleReduce);

static void BM_Bracket(benchmark::State& state) {
    LoopAlgebra loop(SimpleLieAlgebra::sl(3),
                     std::make_shared<const CoeffTables>(parse_curve("t^6 - 2*b*t^3 + 1")));
    LoopElement a = loop.generator("E12", 3, true);
    LoopElement b = loop.generator("E21", -5, false);
    for (auto _ : state) benchmark::DoNotOptimize(loop.bracket(a, b));
}
BENCHMARK(BM_Bracket);

BENCHMARK_MAIN();
