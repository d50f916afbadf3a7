#include <gtest/gtest.h>

#include "gdom/enumerate.hpp"
#include "gdom/errors.hpp"
#include "gdom/products.hpp"
#include "gdom/sequences.hpp"
#include "gdom/solver.hpp"
#include "helpers.hpp"

using namespace gdom;

namespace {

void expect_valid_witness(const Graph& g, Mode mode, const SolveResult& r) {
    const auto rep = check_sequence(g, r.witness, mode);
    EXPECT_TRUE(rep.legal);
    EXPECT_TRUE(rep.dominating);
    EXPECT_EQ(r.witness.size(), r.value);
}

} // namespace

TEST(Solver, PathsCyclesCompletes) {
    EXPECT_EQ(grundy(path_graph(4), Mode::closed).value, 3u);
    EXPECT_EQ(grundy(cycle_graph(6), Mode::closed).value, 4u);
    EXPECT_EQ(grundy(complete_graph(5), Mode::closed).value, 1u);
    EXPECT_EQ(grundy(path_graph(4), Mode::open).value, 4u);
    EXPECT_EQ(grundy(path_graph(5), Mode::open).value, 4u);
    EXPECT_EQ(grundy(cycle_graph(6), Mode::open).value, 4u);
    EXPECT_EQ(grundy(cycle_graph(5), Mode::open).value, 4u);
    EXPECT_EQ(grundy(Graph::from_edges(1, {}), Mode::closed).value, 1u);
}

TEST(Solver, TorusFiveByFive) {
    const Graph c5 = cycle_graph(5);
    const Graph t = product(ProductKind::cartesian, c5, c5).graph;
    const auto r = grundy(t, Mode::closed);
    EXPECT_EQ(r.value, 16u);
    expect_valid_witness(t, Mode::closed, r);
}

TEST(Solver, BruteForceExamples) {
    EXPECT_EQ(grundy_bruteforce(path_graph(3), Mode::closed).value, 2u);
    EXPECT_EQ(grundy_bruteforce(Graph::from_edges(1, {}), Mode::closed).value, 1u);
    EXPECT_EQ(grundy_bruteforce(star_graph(4), Mode::closed).value, 3u);
    EXPECT_THROW(grundy_bruteforce(path_graph(11), Mode::closed), ResourceError);
}

TEST(Solver, MatchesOracleOnSmallConnectedGraphs) {
    for (std::size_t n = 1; n <= 5; ++n) {
        for (const auto& g : enumerate_connected_graphs(n)) {
            for (Mode mode : {Mode::closed, Mode::open}) {
                if (mode == Mode::open && has_isolated_vertex(g)) {
                    continue;
                }
                const auto fast = grundy(g, mode);
                EXPECT_EQ(fast.value, grundy_bruteforce(g, mode).value) << g.name();
                expect_valid_witness(g, mode, fast);
            }
        }
    }
}

TEST(Solver, WitnessIsLexicographicallySmallestOptimum) {
    // The oracle keeps the first strictly longer sequence in lexicographic
    // DFS order, which is the smallest optimal one.
    std::mt19937_64 rng(41);
    for (int i = 0; i < 60; ++i) {
        const Graph g = gdom::testing::random_graph(rng, 3 + i % 6, 0.45);
        EXPECT_EQ(grundy(g, Mode::closed).witness, grundy_bruteforce(g, Mode::closed).witness);
    }
}

TEST(Solver, ThreadsPruningAndEvictionDoNotChangeResults) {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 25; ++i) {
        const Graph g = gdom::testing::random_graph(rng, 12, 0.3);
        const auto base = grundy(g, Mode::closed);
        SolverOptions threaded;
        threaded.threads = 3;
        SolverOptions plain;
        plain.pruning = false;
        SolverOptions tiny;
        tiny.memo_cap = 8;
        for (const auto& o : {threaded, plain, tiny}) {
            const auto r = grundy(g, Mode::closed, o);
            EXPECT_EQ(r.value, base.value);
            EXPECT_EQ(r.witness, base.witness);
        }
    }
    SolverOptions tiny;
    tiny.memo_cap = 4;
    EXPECT_GT(grundy(product(ProductKind::cartesian, path_graph(3), cycle_graph(4)).graph, Mode::closed, tiny)
                  .stats.evictions,
              0u);
}

TEST(Solver, CapacityAndDomainErrors) {
    EXPECT_THROW(grundy(path_graph(65), Mode::closed), ResourceError);
    SolverOptions o;
    o.max_order = 300;
    EXPECT_THROW(grundy(path_graph(3), Mode::closed, o), ParameterError);
    EXPECT_THROW(grundy(Graph::from_edges(2, {}), Mode::open), DomainError);
}

TEST(Solver, WideMasks) {
    SolverOptions o;
    o.max_order = 256;
    EXPECT_EQ(grundy(star_graph(100), Mode::closed, o).value, 99u);
    EXPECT_EQ(grundy(star_graph(200), Mode::closed, o).value, 199u);
    EXPECT_EQ(grundy(complete_graph(150), Mode::closed, o).value, 1u);
    const Graph u = disjoint_union(star_graph(120), path_graph(6));
    EXPECT_EQ(grundy(u, Mode::closed, o).value, 119u + 5u);
}

TEST(Solver, DominationNumberIsALowerBound) {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 80; ++i) {
        const Graph g = gdom::testing::random_graph(rng, 1 + i % 10, 0.35);
        EXPECT_LE(domination_number(g), grundy(g, Mode::closed).value);
    }
    EXPECT_EQ(domination_number(cycle_graph(6)), 2u);
    EXPECT_EQ(domination_number(path_graph(7)), 3u);
}

TEST(Solver, AdditiveOverComponents) {
    std::mt19937_64 rng(29);
    for (int i = 0; i < 40; ++i) {
        const Graph a = gdom::testing::random_graph(rng, 1 + i % 5, 0.5);
        const Graph b = gdom::testing::random_graph(rng, 1 + (i * 3) % 6, 0.5);
        EXPECT_EQ(grundy(disjoint_union(a, b), Mode::closed).value,
                  grundy(a, Mode::closed).value + grundy(b, Mode::closed).value);
        if (!has_isolated_vertex(a) && !has_isolated_vertex(b)) {
            EXPECT_EQ(grundy(disjoint_union(a, b), Mode::open).value,
                      grundy(a, Mode::open).value + grundy(b, Mode::open).value);
        }
    }
}

TEST(Solver, LexGrundyExamples) {
    EXPECT_EQ(lex_grundy(path_graph(4), 2).value, 5u);
    EXPECT_EQ(lex_grundy(cycle_graph(5), 3).value, 7u);
    EXPECT_EQ(lex_grundy(complete_graph(3), 4).value, 4u);
    EXPECT_THROW(lex_grundy(path_graph(3), 0), ParameterError);

    const auto r = lex_grundy(path_graph(4), 2);
    const auto rep = check_sequence(path_graph(4), r.sequence, Mode::closed);
    EXPECT_TRUE(rep.legal && rep.dominating);
    EXPECT_EQ(rep.a_value * (2 - 1) + r.sequence.size(), r.value);
}

TEST(Solver, LexGrundyMatchesProductSolve) {
    for (std::size_t n = 1; n <= 4; ++n) {
        for (const auto& g : enumerate_connected_graphs(n)) {
            for (const Graph& h : {path_graph(3), cycle_graph(4)}) {
                const std::size_t gh = grundy(h, Mode::closed).value;
                EXPECT_EQ(lex_grundy(g, gh).value,
                          grundy(product(ProductKind::lexicographic, g, h).graph, Mode::closed).value);
            }
        }
    }
}

TEST(Solver, WeightedSequenceMatchesDefinition) {
    std::mt19937_64 rng(61);
    for (int i = 0; i < 30; ++i) {
        const Graph g = gdom::testing::random_graph(rng, 2 + i % 6, 0.5);
        const auto r = max_weighted_sequence(g, 5, 2);
        const auto rep = check_sequence(g, r.sequence, Mode::closed);
        EXPECT_TRUE(rep.legal && rep.dominating);
        EXPECT_EQ(rep.a_value * 5 + (r.sequence.size() - rep.a_value) * 2, r.value);
    }
}

TEST(Solver, MemoCapFromEnvironment) {
    ::setenv("GDOM_MEMO_CAP", "1234", 1);
    EXPECT_EQ(default_memo_cap(), 1234u);
    ::setenv("GDOM_MEMO_CAP", "junk", 1);
    EXPECT_EQ(default_memo_cap(), std::size_t{1} << 22);
    ::unsetenv("GDOM_MEMO_CAP");
}
