// Both engines on generated benchmark families.

#include <benchmark/benchmark.h>

#include "parmreach/benchgen.hpp"
#include "parmreach/elimination.hpp"
#include "parmreach/model_parser.hpp"
#include "parmreach/scc_checker.hpp"
#include "parmreach/session.hpp"

using namespace parmreach;

namespace {

BenchSpec spec_for(const benchmark::State& state) {
    switch (state.range(0)) {
        case 0: return BenchSpec::brp(static_cast<unsigned>(state.range(1)), 2);
        case 1: return BenchSpec::crowds(5, static_cast<unsigned>(state.range(1)));
        default: return BenchSpec::zeroconf(static_cast<unsigned>(state.range(1)));
    }
}

template <class Engine>
void run(benchmark::State& state, Engine engine) {
    const std::string text = generate(spec_for(state));
    std::uint64_t polys = 0;
    for (auto _ : state) {
        ScopedSession s;
        Pdtmc m = parse_model(text);
        ReachabilityResult r = engine(m);
        polys = r.stats.pool.stored_polynomials;
        benchmark::DoNotOptimize(r.total);
    }
    state.SetLabel(spec_for(state).name());
    state.counters["polynomials"] = static_cast<double>(polys);
}

void BM_Scc(benchmark::State& state) {
    run(state, [](const Pdtmc& m) { return model_check(m); });
}

void BM_Elimination(benchmark::State& state) {
    run(state, [](const Pdtmc& m) { return eliminate_all(m); });
}

void families(benchmark::internal::Benchmark* b) {
    for (int n : {4, 8, 16}) b->Args({0, n});
    for (int runs : {2, 4, 8}) b->Args({1, runs});
    for (int n : {2, 4}) b->Args({2, n});
    b->Unit(benchmark::kMillisecond);
}

BENCHMARK(BM_Scc)->Apply(families);
BENCHMARK(BM_Elimination)->Apply(families);

}  // namespace

BENCHMARK_MAIN();
