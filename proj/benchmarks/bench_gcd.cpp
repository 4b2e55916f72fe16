// Factored gcd against the flat multivariate gcd on products of shared bases.

#include <benchmark/benchmark.h>

#include <random>

#include "parmreach/factorization.hpp"
#include "parmreach/session.hpp"

using namespace parmreach;

namespace {

struct Operands {
    std::vector<Factorization> left, right;
};

Operands make_operands(int bases_per_side, std::size_t count) {
    auto& vars = current_session().variables();
    Polynomial x = Polynomial::variable(vars.intern("x"));
    Polynomial y = Polynomial::variable(vars.intern("y"));
    Polynomial z = Polynomial::variable(vars.intern("z"));
    std::vector<Polynomial> atoms{x + 1, y - 2, x + z, x * y + 3, z * z + y, x - y + z, y * z + x};
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<std::size_t> pick(0, atoms.size() - 1);
    std::uniform_int_distribution<std::uint32_t> exponent(1, 2);
    auto random_factorization = [&] {
        std::vector<Factorization::RawFactor> raw;
        for (int i = 0; i < bases_per_side; ++i) raw.emplace_back(atoms[pick(rng)] * atoms[pick(rng)], exponent(rng));
        return Factorization::from_factors(raw);
    };
    Operands ops;
    for (std::size_t i = 0; i < count; ++i) {
        ops.left.push_back(random_factorization());
        ops.right.push_back(random_factorization());
    }
    return ops;
}

void BM_GcdFactored(benchmark::State& state) {
    for (auto _ : state) {
        state.PauseTiming();
        ScopedSession s;
        Operands ops = make_operands(static_cast<int>(state.range(0)), 32);
        state.ResumeTiming();
        for (std::size_t i = 0; i < ops.left.size(); ++i) benchmark::DoNotOptimize(gcd_factored(ops.left[i], ops.right[i]));
    }
}
BENCHMARK(BM_GcdFactored)->Arg(1)->Arg(2)->Arg(3);

void BM_GcdExpanded(benchmark::State& state) {
    ScopedSession s;
    Operands ops = make_operands(static_cast<int>(state.range(0)), 32);
    std::vector<Polynomial> left, right;
    for (std::size_t i = 0; i < ops.left.size(); ++i) {
        left.push_back(ops.left[i].expand());
        right.push_back(ops.right[i].expand());
    }
    for (auto _ : state)
        for (std::size_t i = 0; i < left.size(); ++i) benchmark::DoNotOptimize(gcd(left[i], right[i]));
}
BENCHMARK(BM_GcdExpanded)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
