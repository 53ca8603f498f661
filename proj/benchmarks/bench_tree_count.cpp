#include <benchmark/benchmark.h>

#include "kappagraph/graph.hpp"
#include "kappagraph/graph_expr.hpp"
#include "kappagraph/group.hpp"
#include "kappagraph/tree_count.hpp"

using namespace kappagraph;

static void BM_TreeNumberCompleteBareiss(benchmark::State& state) {
    Graph g = realize(GraphExpr::complete(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(tree_number(g, DetMethod::Bareiss));
}
BENCHMARK(BM_TreeNumberCompleteBareiss)->Arg(32)->Arg(64)->Arg(128);

static void BM_TreeNumberCompleteCrt(benchmark::State& state) {
    Graph g = realize(GraphExpr::complete(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(tree_number(g, DetMethod::Multimodular));
}
BENCHMARK(BM_TreeNumberCompleteCrt)->Arg(32)->Arg(64)->Arg(128)->Arg(256);

static void BM_TreeNumberPowerGraphL27(benchmark::State& state) {
    Group g = build_group("PSL2:7");
    Graph p = power_graph(g);
    for (auto _ : state) benchmark::DoNotOptimize(tree_number(p));
}
BENCHMARK(BM_TreeNumberPowerGraphL27);

static void BM_TreeNumberPowerGraphA6(benchmark::State& state) {
    Group g = build_group("A:6");
    Graph p = power_graph(g);
    for (auto _ : state) benchmark::DoNotOptimize(tree_number(p));
}
BENCHMARK(BM_TreeNumberPowerGraphA6);

BENCHMARK_MAIN();
