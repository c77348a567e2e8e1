#include <benchmark/benchmark.h>

#include "dsrpm/family.hpp"
#include "dsrpm/harness.hpp"
#include "dsrpm/matching.hpp"
#include "dsrpm/quotient.hpp"
#include "dsrpm/random_graphs.hpp"
#include "dsrpm/spectra.hpp"

using namespace dsrpm;

static void BM_SpectralRadiusExtremal(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    const DistanceMatrix d = distance_matrix(extremal_family(8 * k + 6, k));
    for (auto _ : state) benchmark::DoNotOptimize(distance_spectral_radius(d));
}
BENCHMARK(BM_SpectralRadiusExtremal)->DenseRange(1, 7);

static void BM_SpectralRadiusRandom(benchmark::State& state) {
    Rng rng(1);
    const Graph g = random_connected_graph(static_cast<int>(state.range(0)), rng);
    const DistanceMatrix d = distance_matrix(g);
    for (auto _ : state) benchmark::DoNotOptimize(distance_spectral_radius(d));
}
BENCHMARK(BM_SpectralRadiusRandom)->RangeMultiplier(2)->Range(8, 64);

static void BM_Blossom(benchmark::State& state) {
    Rng rng(2);
    const int n = static_cast<int>(state.range(0));
    const Graph g = erdos_renyi(n, 4.0 / n, rng);
    for (auto _ : state) benchmark::DoNotOptimize(max_matching(g));
}
BENCHMARK(BM_Blossom)->RangeMultiplier(2)->Range(8, 64);

static void BM_FractionalPM(benchmark::State& state) {
    const Graph g = extremal_family(static_cast<int>(state.range(0)), 2);
    for (auto _ : state) benchmark::DoNotOptimize(fractional_pm(g));
}
BENCHMARK(BM_FractionalPM)->Arg(22)->Arg(40)->Arg(64);

static void BM_CharPolyQuotient(benchmark::State& state) {
    const ExactMatrix q = cut_family_quotient_literal(state.range(0), 3);
    for (auto _ : state) benchmark::DoNotOptimize(char_poly(q));
}
BENCHMARK(BM_CharPolyQuotient)->Arg(30)->Arg(60);

static void BM_ExhaustiveScanN6(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(exhaustive_theorem_1_1(6));
}
BENCHMARK(BM_ExhaustiveScanN6)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
