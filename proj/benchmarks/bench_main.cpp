#include <benchmark/benchmark.h>

#include "trdom/bounds.hpp"
#include "trdom/exact.hpp"
#include "trdom/families.hpp"
#include "trdom/graph.hpp"
#include "trdom/labeling.hpp"
#include "trdom/reduction.hpp"
#include "trdom/tree_dp.hpp"

namespace {

using namespace trdom;

void BM_verify_cycle(benchmark::State& state) {
    const int p = static_cast<int>(state.range(0));
    Graph g = gen::cycle(p);
    Labeling l = gamma_cycle(p).certificate;
    for (auto _ : state) benchmark::DoNotOptimize(verify_3rdf(g, l).valid());
    state.SetComplexityN(p);
}
BENCHMARK(BM_verify_cycle)->RangeMultiplier(10)->Range(100, 100000)->Complexity();

void BM_tree_dp(benchmark::State& state) {
    const int p = static_cast<int>(state.range(0));
    Graph g = gen::random_tree(p, 12345);
    for (auto _ : state) benchmark::DoNotOptimize(gamma_3r_tree(g).weight);
    state.SetComplexityN(p);
}
BENCHMARK(BM_tree_dp)->RangeMultiplier(4)->Range(64, 4096)->Complexity();

void BM_bnb_cycle(benchmark::State& state) {
    const int p = static_cast<int>(state.range(0));
    Graph g = gen::cycle(p);
    for (auto _ : state) benchmark::DoNotOptimize(gamma_3r_bnb(g).weight);
}
BENCHMARK(BM_bnb_cycle)->DenseRange(12, 24, 4);

void BM_bruteforce_path(benchmark::State& state) {
    const int p = static_cast<int>(state.range(0));
    Graph g = gen::path(p);
    for (auto _ : state) benchmark::DoNotOptimize(gamma_kr_bruteforce(g, 3).weight);
}
BENCHMARK(BM_bruteforce_path)->DenseRange(8, 12, 2);

X3CInstance bench_instance() {
    X3CInstance inst;
    inst.q = 4;
    inst.triples = {{0, 1, 2}, {3, 4, 5}, {6, 7, 8}, {9, 10, 11},
                    {1, 2, 3}, {4, 5, 6}, {7, 8, 9}, {2, 5, 8}};
    return inst;
}

void BM_gadget_build(benchmark::State& state) {
    X3CInstance inst = bench_instance();
    for (auto _ : state)
        benchmark::DoNotOptimize(build_gadget(inst, GadgetVariant::bipartite).graph.size());
}
BENCHMARK(BM_gadget_build);

void BM_x3c_search(benchmark::State& state) {
    X3CInstance inst = bench_instance();
    for (auto _ : state) benchmark::DoNotOptimize(x3c_bruteforce(inst).has_value());
}
BENCHMARK(BM_x3c_search);

void BM_bounds(benchmark::State& state) {
    Graph g = gen::gnp(60, 0.15, 99);
    for (auto _ : state) benchmark::DoNotOptimize(best_bounds(g).entries.size());
}
BENCHMARK(BM_bounds);

}  // namespace

BENCHMARK_MAIN();
