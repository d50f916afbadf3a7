#include <benchmark/benchmark.h>

#include "gdom/clique_cover.hpp"
#include "gdom/products.hpp"
#include "gdom/solver.hpp"

using namespace gdom;

namespace {

void BM_CartesianTorus(benchmark::State& state) {
    const auto k = static_cast<std::size_t>(state.range(0));
    const Graph g = product(ProductKind::cartesian, cycle_graph(k), cycle_graph(k)).graph;
    for (auto _ : state) {
        benchmark::DoNotOptimize(grundy(g, Mode::closed).value);
    }
}
BENCHMARK(BM_CartesianTorus)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

void BM_Grid(benchmark::State& state) {
    const auto k = static_cast<std::size_t>(state.range(0));
    const Graph g = product(ProductKind::cartesian, path_graph(k), path_graph(k + 1)).graph;
    for (auto _ : state) {
        benchmark::DoNotOptimize(grundy(g, Mode::closed).value);
    }
}
BENCHMARK(BM_Grid)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_OpenMode(benchmark::State& state) {
    const Graph g = product(ProductKind::strong, path_graph(3), cycle_graph(static_cast<std::size_t>(state.range(0))))
                        .graph;
    for (auto _ : state) {
        benchmark::DoNotOptimize(grundy(g, Mode::open).value);
    }
}
BENCHMARK(BM_OpenMode)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

void BM_NoPruning(benchmark::State& state) {
    const Graph g = product(ProductKind::cartesian, path_graph(3), cycle_graph(4)).graph;
    SolverOptions o;
    o.pruning = state.range(0) != 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(grundy(g, Mode::closed, o).value);
    }
}
BENCHMARK(BM_NoPruning)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_LexGrundy(benchmark::State& state) {
    const Graph g = cycle_graph(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(lex_grundy(g, 3).value);
    }
}
BENCHMARK(BM_LexGrundy)->DenseRange(6, 14, 4);

void BM_CliqueCoverStrong(benchmark::State& state) {
    const auto k = static_cast<std::size_t>(state.range(0));
    const Graph g = product(ProductKind::strong, path_graph(k), cycle_graph(4)).graph;
    for (auto _ : state) {
        benchmark::DoNotOptimize(edge_clique_cover_number(g, {.force_general = true}));
    }
}
BENCHMARK(BM_CliqueCoverStrong)->DenseRange(2, 4);

} // namespace

BENCHMARK_MAIN();
