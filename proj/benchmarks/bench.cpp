#include <benchmark/benchmark.h>

#include "ardet/checks.hpp"
#include "ardet/determiner.hpp"
#include "ardet/sweep.hpp"

namespace {

ardet::Quiver a13_bound() {
    return ardet::parse_quiver("1 > 2 < 3 > 4 > 5 < 6 < 7 < 8 > 9 > 10 > 11 > 12 > 13\n"
                               "rel: 3 4 5\nrel: 8 7 6 5\nrel: 8 9 10\nrel: 11 12 13");
}

ardet::Quiver linear(int n) {
    return ardet::Quiver::make(n, std::vector<ardet::Dir>(static_cast<size_t>(n - 1),
                                                          ardet::Dir::Right));
}

void BM_BuildARQuiver(benchmark::State& state) {
    const ardet::Quiver q = linear(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(ardet::build_ar_quiver(q));
}
BENCHMARK(BM_BuildARQuiver)->Arg(6)->Arg(9)->Arg(12);

void BM_DetSetBound13(benchmark::State& state) {
    const ardet::Quiver q = a13_bound();
    for (auto _ : state) benchmark::DoNotOptimize(ardet::det_set(q));
}
BENCHMARK(BM_DetSetBound13);

void BM_OracleDeterminer(benchmark::State& state) {
    const ardet::Quiver q = a13_bound();
    const ardet::ARQuiver ar = ardet::build_ar_quiver(q);
    const ardet::IrreducibleMorphism first = ar.irreducibles().front();
    for (auto _ : state) benchmark::DoNotOptimize(ardet::oracle_minimal_determiner(q, first));
}
BENCHMARK(BM_OracleDeterminer);

void BM_SweepOrientations(benchmark::State& state) {
    ardet::SweepOptions opts;
    opts.n_max = static_cast<int>(state.range(0));
    for (auto _ : state) {
        const ardet::SweepSummary summary = ardet::run_sweep(opts);
        if (!summary.ok()) state.SkipWithError("sweep failed");
    }
}
BENCHMARK(BM_SweepOrientations)->Arg(6)->Arg(7);

void BM_MatrixHomAllPairs(benchmark::State& state) {
    const ardet::Quiver q = a13_bound();
    const auto modules = ardet::all_indecomposables(q);
    for (auto _ : state)
        for (const ardet::Interval& m : modules)
            for (const ardet::Interval& n : modules)
                benchmark::DoNotOptimize(ardet::checks::matrix_hom(q, m, n));
}
BENCHMARK(BM_MatrixHomAllPairs);

void BM_InvariantSuite(benchmark::State& state) {
    const ardet::Quiver q = a13_bound();
    for (auto _ : state) {
        const auto failures = ardet::checks::run_invariant_suite(q);
        if (!failures.empty()) state.SkipWithError("suite failed");
    }
}
BENCHMARK(BM_InvariantSuite);

} // namespace

BENCHMARK_MAIN();
