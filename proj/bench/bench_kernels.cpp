// Serial reference against the OpenMP kernels.

#include "hopfk/heckenberger.hpp"
#include "hopfk/hopfops.hpp"

#include <benchmark/benchmark.h>

using namespace hopfk;

namespace {

BParams b_params(std::vector<long> p, std::vector<long> alpha) {
    BParams b;
    b.n = 1;
    b.p = std::move(p);
    b.q = make_root(static_cast<int>(b.ell()), 1);
    for (long a : alpha) b.alpha.emplace_back(a);
    return b;
}

Execution mode(const benchmark::State& state) { return state.range(0) ? Execution::Parallel : Execution::Serial; }

void BM_HopfAxioms(benchmark::State& state) {
    const auto h = HopfPresentation::b_family(b_params({2, 3}, {0, 1}));
    for (auto _ : state) benchmark::DoNotOptimize(check_hopf_axioms(h, 8, 16, mode(state)).all_pass());
}

void BM_SkewPrimitiveScan(benchmark::State& state) {
    const auto h = HopfPresentation::b_family(b_params({2, 3}, {0, 1}));
    for (auto _ : state) benchmark::DoNotOptimize(scan_skew_primitives(h, -12, 12, 6, std::nullopt, mode(state)).size());
}

void BM_DatumSweep(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(sweep_datum_cases(3, 12, mode(state)).inputs);
}

}  // namespace

BENCHMARK(BM_HopfAxioms)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_SkewPrimitiveScan)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_DatumSweep)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
