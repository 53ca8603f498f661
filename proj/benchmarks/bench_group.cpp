#include <benchmark/benchmark.h>

#include "kappagraph/graph.hpp"
#include "kappagraph/group.hpp"
#include "kappagraph/structure.hpp"

using namespace kappagraph;

static void BM_BuildGroup(benchmark::State& state, const char* spec) {
    for (auto _ : state) benchmark::DoNotOptimize(build_group(spec));
}
BENCHMARK_CAPTURE(BM_BuildGroup, psl2_7, "PSL2:7");
BENCHMARK_CAPTURE(BM_BuildGroup, a6, "A:6");
BENCHMARK_CAPTURE(BM_BuildGroup, z512, "Z:512");

static void BM_PowerGraphA6(benchmark::State& state) {
    Group g = build_group("A:6");
    for (auto _ : state) benchmark::DoNotOptimize(power_graph(g));
}
BENCHMARK(BM_PowerGraphA6);

static void BM_DecompositionSearch(benchmark::State& state, const char* spec, unsigned blocks) {
    Group g = build_group(spec);
    for (auto _ : state)
        benchmark::DoNotOptimize(find_power_free_decomposition(g, blocks));
}
BENCHMARK_CAPTURE(BM_DecompositionSearch, q32_two_blocks, "Q:32", 2u);
BENCHMARK_CAPTURE(BM_DecompositionSearch, s4_one_block, "S:4", 1u);
