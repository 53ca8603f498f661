#include <benchmark/benchmark.h>

#include "kappagraph/spectrum.hpp"
#include "kappagraph/suzuki.hpp"

using namespace kappagraph;

static void BM_SuzukiSpectralRoute(benchmark::State& state) {
    const std::uint64_t q = 1ull << (2 * state.range(0) + 1);
    for (auto _ : state) {
        auto kappa = kappa_factored_from_spectrum(spectrum(suzuki_commuting_expr(q)));
        benchmark::DoNotOptimize(kappa);
    }
}
BENCHMARK(BM_SuzukiSpectralRoute)->Arg(1)->Arg(2)->Arg(3);

static void BM_SuzukiClosedForm(benchmark::State& state) {
    const std::uint64_t q = 1ull << (2 * state.range(0) + 1);
    for (auto _ : state) benchmark::DoNotOptimize(kappa_suzuki_closed(q));
}
BENCHMARK(BM_SuzukiClosedForm)->Arg(1)->Arg(3);

static void BM_SuzukiExpandedQ8(benchmark::State& state) {
    for (auto _ : state) {
        BigCount v = kappa_from_spectrum(spectrum(suzuki_commuting_expr(8)));
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_SuzukiExpandedQ8);
