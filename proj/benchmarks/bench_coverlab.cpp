#include <benchmark/benchmark.h>

#include "coverlab/betti.hpp"
#include "coverlab/graph.hpp"
#include "coverlab/hilbert.hpp"
#include "coverlab/powers.hpp"

using namespace coverlab;

namespace {

MonomialIdeal crown_power(std::size_t n, int s) { return power(cover_ideal(crown(n)).ideal, s); }

} // namespace

static void BM_CoverIdealCrown(benchmark::State& state) {
    const auto g = crown(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(cover_ideal(g));
}
BENCHMARK(BM_CoverIdealCrown)->DenseRange(3, 7);

static void BM_SymbolicPowerMultipartite(benchmark::State& state) {
    const auto J = cover_ideal(complete_multipartite({2, 2, 1, 1})).ideal;
    const int s = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(symbolic_power(J, s));
}
BENCHMARK(BM_SymbolicPowerMultipartite)->DenseRange(1, 5);

static void BM_SymbolicRecursion(benchmark::State& state) {
    const int s = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(multipartite_symbolic_generators({2, 2, 1, 1}, s));
}
BENCHMARK(BM_SymbolicRecursion)->DenseRange(1, 5);

static void BM_HilbertNumeratorCrown(benchmark::State& state) {
    const auto I = crown_power(static_cast<std::size_t>(state.range(0)), static_cast<int>(state.range(1)));
    for (auto _ : state) benchmark::DoNotOptimize(numerator(I));
}
BENCHMARK(BM_HilbertNumeratorCrown)->Args({3, 1})->Args({3, 3})->Args({4, 2})->Args({4, 3})->Args({5, 2});

static void BM_HilbertOracle(benchmark::State& state) {
    const auto I = crown_power(3, 2);
    for (auto _ : state) benchmark::DoNotOptimize(hilbert_function_oracle(I, 12));
}
BENCHMARK(BM_HilbertOracle);

static void BM_LcmLattice(benchmark::State& state) {
    const auto I = crown_power(4, static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(lcm_lattice(I));
}
BENCHMARK(BM_LcmLattice)->DenseRange(1, 3);

static void BM_BettiTableCrown(benchmark::State& state) {
    const auto I = crown_power(static_cast<std::size_t>(state.range(0)), static_cast<int>(state.range(1)));
    const BettiOptions options{static_cast<std::size_t>(state.range(2))};
    for (auto _ : state) benchmark::DoNotOptimize(betti_table(I, options));
}
BENCHMARK(BM_BettiTableCrown)
    ->Args({3, 2, 1})
    ->Args({4, 2, 1})
    ->Args({4, 3, 1})
    ->Args({4, 3, 0})
    ->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
