#include <benchmark/benchmark.h>

#include <random>

#include "pathset/graph.hpp"
#include "pathset/pathset.hpp"

using namespace pathset;

namespace {

PathSetHandle digit_set(int p, std::vector<Digit> digits) { return standardize(digit_set_presentation(p, digits)); }

// Y01 + r for a rational with a long period makes a big deterministic chain.
PathSetHandle long_chain(std::int64_t den) { return add_rational(digit_set(3, {0, 1}), Rational(1, den)); }

void BM_AddRational(benchmark::State& state) {
    const PathSetHandle y = digit_set(5, {0, 1, 3});
    const Rational r(7, state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(add_rational(y, r));
}
BENCHMARK(BM_AddRational)->Arg(11)->Arg(101)->Arg(1009);

void BM_MinkowskiSum(benchmark::State& state) {
    const PathSetHandle a = long_chain(state.range(0));
    const PathSetHandle b = digit_set(3, {0, 2});
    for (auto _ : state) benchmark::DoNotOptimize(minkowski_sum(a, b));
}
BENCHMARK(BM_MinkowskiSum)->Arg(5)->Arg(49);

void BM_MulRational(benchmark::State& state) {
    const PathSetHandle y = long_chain(7);
    const Rational r(state.range(0), 47);
    for (auto _ : state) benchmark::DoNotOptimize(mul_rational(y, r));
}
BENCHMARK(BM_MulRational)->Arg(2)->Arg(43);

void BM_Determinize(benchmark::State& state) {
    // "1 somewhere in the last n digits": 2^n subsets.
    const int n = static_cast<int>(state.range(0));
    Presentation pres;
    pres.p = 2;
    for (int v = 0; v <= n; ++v) pres.vertices.push_back(v);
    pres.edges = {{0, 0, 0}, {0, 0, 1}, {0, 1, 1}, {n, n, 0}, {n, n, 1}};
    for (int v = 1; v < n; ++v) {
        pres.edges.push_back({v, v + 1, 0});
        pres.edges.push_back({v, v + 1, 1});
    }
    for (auto _ : state) benchmark::DoNotOptimize(standardize(pres));
    state.SetComplexityN(n);
}
BENCHMARK(BM_Determinize)->DenseRange(8, 14, 2);

void BM_SpectralRadius(benchmark::State& state) {
    std::mt19937_64 rng(1);
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    AdjacencyMatrix a{n, std::vector<std::vector<std::uint64_t>>(n, std::vector<std::uint64_t>(n))};
    std::bernoulli_distribution edge(0.2);
    for (auto& row : a.entries)
        for (auto& x : row) x = edge(rng) ? 1 : 0;
    for (auto _ : state) benchmark::DoNotOptimize(spectral_radius(a));
}
BENCHMARK(BM_SpectralRadius)->Arg(16)->Arg(64)->Arg(256);

void BM_Prefixes(benchmark::State& state) {
    const PathSetHandle y = long_chain(13);
    const auto depth = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(prefixes(y, depth));
}
BENCHMARK(BM_Prefixes)->Arg(8)->Arg(14);

void BM_CountPrefixes(benchmark::State& state) {
    const PathSetHandle y = minkowski_sum(digit_set(5, {0, 1}), digit_set(5, {0, 4}));
    const auto depth = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(count_prefixes(y.presentation(), depth));
}
BENCHMARK(BM_CountPrefixes)->Arg(100)->Arg(1000);

}  // namespace
BENCHMARK_MAIN();
