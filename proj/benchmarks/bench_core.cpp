#include <random>

#include <benchmark/benchmark.h>

#include "hatp4/canonical.hpp"
#include "hatp4/constructions.hpp"
#include "hatp4/detect.hpp"
#include "hatp4/search.hpp"
#include "hatp4/small_graph.hpp"

using namespace hatp4;

namespace {

Graph random_graph(int n, double p, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(p);
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

void BM_TriangleCount(benchmark::State& state) {
    const auto g = extremal_construction(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(triangle_count(g));
}
BENCHMARK(BM_TriangleCount)->Arg(64)->Arg(256)->Arg(1000);

void BM_P4HatCheck(benchmark::State& state) {
    const auto g = extremal_construction(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(is_p4hat_free(g));
}
BENCHMARK(BM_P4HatCheck)->Arg(16)->Arg(64)->Arg(200);

void BM_P4HatKernel(benchmark::State& state) {
    const auto g = to_small(extremal_construction(12));
    for (auto _ : state) benchmark::DoNotOptimize(kernels::is_p4hat_free(g));
}
BENCHMARK(BM_P4HatKernel);

void BM_CanonicalRandom(benchmark::State& state) {
    const auto g = to_small(random_graph(static_cast<int>(state.range(0)), 0.5, 7));
    for (auto _ : state) benchmark::DoNotOptimize(canonical_labeling(g));
}
BENCHMARK(BM_CanonicalRandom)->Arg(8)->Arg(12)->Arg(32);

void BM_CanonicalSymmetric(benchmark::State& state) {
    const auto g = to_small(extremal_construction(static_cast<int>(state.range(0))));
    for (auto _ : state) benchmark::DoNotOptimize(canonical_labeling(g));
}
BENCHMARK(BM_CanonicalSymmetric)->Arg(12)->Arg(32);

void BM_Augment(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(ex_augment(static_cast<int>(state.range(0)), ForbiddenSet::p4hat()));
}
BENCHMARK(BM_Augment)->Arg(7)->Unit(benchmark::kMillisecond);

void BM_BranchBound(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(ex_branch_bound(static_cast<int>(state.range(0)), ForbiddenSet::p4hat()));
}
BENCHMARK(BM_BranchBound)->Arg(8)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
