#include <benchmark/benchmark.h>

#include "omcg/axioms.hpp"
#include "omcg/generators.hpp"
#include "omcg/graphs.hpp"
#include "omcg/lattice.hpp"
#include "omcg/verify.hpp"

using namespace omcg;

namespace {

void BM_Compose(benchmark::State& state) {
    const SignSystem s = u2n(16);
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(compose(s[i % s.size()], s[(i + 7) % s.size()]));
        ++i;
    }
}
BENCHMARK(BM_Compose);

void BM_Closure(benchmark::State& state) {
    const SignSystem s = cyclic(3, static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(closure(s));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Closure)->DenseRange(4, 8)->Complexity();

void BM_CheckC3(benchmark::State& state) {
    const SignSystem s = u2n(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(check_c3(s));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_CheckC3)->RangeMultiplier(2)->Range(4, 32)->Complexity();

void BM_ConditionIII(benchmark::State& state) {
    const SignSystem s = u2n(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(check_condition_iii(s));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ConditionIII)->RangeMultiplier(2)->Range(4, 32)->Complexity();

void BM_VertexConnectivity(benchmark::State& state) {
    const FaceLattice lat = build_lattice(cyclic(3, static_cast<std::size_t>(state.range(0))));
    const SignedGraph g = cocircuit_graph(lat);
    for (auto _ : state) {
        benchmark::DoNotOptimize(vertex_connectivity(g));
    }
}
BENCHMARK(BM_VertexConnectivity)->DenseRange(4, 8);

void BM_TopeGraph(benchmark::State& state) {
    const FaceLattice lat = build_lattice(cyclic(3, static_cast<std::size_t>(state.range(0))));
    for (auto _ : state) {
        benchmark::DoNotOptimize(tope_graph(lat));
    }
}
BENCHMARK(BM_TopeGraph)->DenseRange(4, 8);

} // namespace

BENCHMARK_MAIN();
