// Serial vs OpenMP kernels. With one core the parallel variants mostly show
// their overhead.
#include <benchmark/benchmark.h>

#include "slopelab/coset_enum.hpp"
#include "slopelab/fillings.hpp"
#include "slopelab/groups.hpp"
#include "slopelab/oracles.hpp"
#include "slopelab/quotients.hpp"

using namespace slopelab;

namespace {

void homs(benchmark::State& state, const char* target, bool parallel) {
    const Presentation p = fill(figure_eight(), Slope(1, 1));
    const RelatorSystem rels(p);
    const FiniteGroup& g = standard_group(target);
    for (auto _ : state) {
        HomSearchStats stats;
        auto out = parallel ? enumerate_homs_parallel(g, rels, 0, stats) : enumerate_homs_serial(g, rels, 0, stats);
        benchmark::DoNotOptimize(out);
        state.counters["assignments"] = static_cast<double>(stats.assignments);
    }
}

void scan(benchmark::State& state, int jobs) {
    const Presentation k = figure_eight();
    const Word w = commutator(Word::generator("a"), Word::generator("h"));
    Budget b;
    b.parallel = false;
    b.sym_max = 5;
    b.psl2_primes = {5, 7};
    const auto slopes = slope_window(-4, 4, 1);
    for (auto _ : state) benchmark::DoNotOptimize(sk_scan(k, w, slopes, b, jobs));
}

void cosets(benchmark::State& state) {
    const Presentation p = fill(torus_knot(2, 3), Slope(state.range(0), 1));
    for (auto _ : state) benchmark::DoNotOptimize(todd_coxeter(p, 200000));
}

} // namespace

BENCHMARK_CAPTURE(homs, s5_serial, "S5", false)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(homs, s5_parallel, "S5", true)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(homs, psl2_7_serial, "PSL2_7", false)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(homs, psl2_7_parallel, "PSL2_7", true)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(scan, jobs1, 1)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(scan, jobs_default, 0)->Unit(benchmark::kMillisecond);
BENCHMARK(cosets)->Arg(3)->Arg(4)->Arg(5)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
