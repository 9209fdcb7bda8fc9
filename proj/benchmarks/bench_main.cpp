#include <benchmark/benchmark.h>

#include "sgr/canonical.hpp"
#include "sgr/coloring.hpp"
#include "sgr/girth.hpp"
#include "sgr/kneser.hpp"
#include "sgr/mycielskian.hpp"
#include "sgr/random.hpp"
#include "sgr/search.hpp"

namespace {

void BM_NegativeGirthKneser(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const int k = static_cast<int>(state.range(1));
    sgr::KneserLabeling kl = sgr::kneser_signed(n, k);
    for (auto _ : state) {
        auto girth = sgr::negative_girth(kl.graph);
        benchmark::DoNotOptimize(girth);
    }
}
BENCHMARK(BM_NegativeGirthKneser)->Args({6, 4})->Args({7, 5})->Unit(benchmark::kMillisecond);

void BM_KneserBuild(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const int k = static_cast<int>(state.range(1));
    for (auto _ : state) {
        auto kl = sgr::kneser_signed(n, k);
        benchmark::DoNotOptimize(kl);
    }
}
BENCHMARK(BM_KneserBuild)->Args({6, 4})->Args({7, 4})->Unit(benchmark::kMillisecond);

void BM_ChiBReducedSchrijver(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const int k = static_cast<int>(state.range(1));
    sgr::SignedGraph g = sgr::reduce_labeled(sgr::schrijver_signed(n, k)).graph;
    for (auto _ : state) {
        auto chi = sgr::balanced_chromatic_number(g);
        benchmark::DoNotOptimize(chi);
    }
}
BENCHMARK(BM_ChiBReducedSchrijver)->Args({6, 4})->Args({6, 2})->Unit(benchmark::kMillisecond);

void BM_CanonicalFormRandom(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    sgr::Rng rng(7);
    std::vector<sgr::SignedGraph> graphs;
    for (int i = 0; i < 16; ++i) graphs.push_back(sgr::random_signed_graph(rng, n, 0.4));
    std::size_t i = 0;
    for (auto _ : state) {
        auto form = sgr::canonical_form(graphs[i++ % graphs.size()]);
        benchmark::DoNotOptimize(form);
    }
}
BENCHMARK(BM_CanonicalFormRandom)->Arg(8)->Arg(12)->Unit(benchmark::kMicrosecond);

void BM_MinimumOrderSearch(benchmark::State& state) {
    for (auto _ : state) {
        auto report = sgr::minimum_order_search(3, 3, static_cast<int>(state.range(0)));
        benchmark::DoNotOptimize(report);
    }
}
BENCHMARK(BM_MinimumOrderSearch)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_MaxBalancedSet(benchmark::State& state) {
    sgr::SignedGraph g = sgr::myc13();
    for (auto _ : state) {
        auto best = sgr::max_balanced_set(g);
        benchmark::DoNotOptimize(best);
    }
}
BENCHMARK(BM_MaxBalancedSet)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
