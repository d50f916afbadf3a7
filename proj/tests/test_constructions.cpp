#include <gtest/gtest.h>

#include "gdom/bounds.hpp"
#include "gdom/constructions.hpp"
#include "gdom/enumerate.hpp"
#include "gdom/errors.hpp"
#include "gdom/products.hpp"
#include "gdom/sequences.hpp"
#include "gdom/solver.hpp"
#include "helpers.hpp"

using namespace gdom;

namespace {

void expect_dominating(const Graph& g, const VertexSequence& s, std::size_t length) {
    const auto r = check_sequence(g, s, Mode::closed);
    EXPECT_TRUE(r.legal) << g.name();
    EXPECT_TRUE(r.dominating) << g.name();
    EXPECT_EQ(s.size(), length) << g.name();
}

VertexSequence optimum(const Graph& g, Mode mode = Mode::closed) { return grundy(g, mode).witness; }

} // namespace

TEST(Constructions, Cartesian) {
    const Graph g = path_graph(4);
    const Graph h = cycle_graph(3);
    const auto s = construct_cartesian_witness(g, h, optimum(g));
    expect_dominating(product(ProductKind::cartesian, g, h).graph, s, 9);
    EXPECT_THROW(construct_cartesian_witness(g, h, {0, 0}), ParameterError);
    EXPECT_THROW(construct_cartesian_witness(g, h, {0}), ParameterError);
}

TEST(Constructions, CartesianSelfFootprintingItems) {
    // Leaves of a star footprint only themselves after the first, so their
    // layer copies shrink to an independent set of H.
    const Graph s = star_graph(4);
    const Graph p2 = path_graph(2);
    const auto w = construct_cartesian_witness(s, p2, {1, 2, 3});
    EXPECT_EQ(w, (VertexSequence{2, 3, 4, 6}));
    EXPECT_TRUE(check_sequence(product(ProductKind::cartesian, s, p2).graph, w, Mode::closed).legal);
    EXPECT_EQ(cartesian_layer_bound(p2, s, {0}), 4u);
    EXPECT_EQ(grundy(product(ProductKind::cartesian, p2, s).graph, Mode::closed).value, 5u);
}

TEST(Constructions, CompleteGrid) {
    for (std::size_t n = 3; n <= 5; ++n) {
        for (std::size_t m = 3; m <= 5; ++m) {
            const auto s = construct_complete_grid_witness(n, m);
            expect_dominating(product(ProductKind::cartesian, complete_graph(n), complete_graph(m)).graph, s,
                              n + m - 2);
        }
    }
    EXPECT_EQ(construct_complete_grid_witness(3, 3), (VertexSequence{0, 3, 1, 2}));
    EXPECT_THROW(construct_complete_grid_witness(2, 4), ParameterError);
}

TEST(Constructions, OddTorus) {
    for (std::size_t k = 3; k <= 11; k += 2) {
        const Graph t = product(ProductKind::cartesian, cycle_graph(k), cycle_graph(k)).graph;
        expect_dominating(t, construct_odd_torus_witness(k), k * (k - 2) + 1);
    }
    const auto pts = odd_torus_points(5);
    EXPECT_EQ(pts.front(), (TorusPoint{-1, 0}));
    EXPECT_EQ(odd_torus_vertex(5, pts.front()), 7u);
    EXPECT_EQ(odd_torus_vertex(5, {0, 0}), 12u);
    EXPECT_THROW(odd_torus_points(4), ParameterError);
    EXPECT_THROW(odd_torus_vertex(5, {3, 0}), ParameterError);
}

TEST(Constructions, Lex) {
    const Graph g = path_graph(4);
    const Graph h = path_graph(3);
    const auto sh = optimum(h);
    const auto s = construct_lex_witness(g, lex_grundy(g, sh.size()).sequence, h, sh);
    const Graph p = product(ProductKind::lexicographic, g, h).graph;
    const auto r = check_sequence(p, s, Mode::closed);
    EXPECT_TRUE(r.legal);
    EXPECT_TRUE(r.dominating);
    EXPECT_EQ(s.size(), grundy(p, Mode::closed).value);
}

TEST(Constructions, Direct) {
    const Graph g = path_graph(3);
    const Graph h = cycle_graph(4);
    const auto s = construct_direct_witness(g, optimum(g), h, optimum(h, Mode::open));
    const Graph p = product(ProductKind::direct, g, h).graph;
    const auto r = check_sequence(p, s, Mode::closed);
    EXPECT_TRUE(r.legal);
    EXPECT_TRUE(r.dominating);
    EXPECT_LE(s.size(), grundy(p, Mode::closed).value);
    // K_2 with D = (0,1) is not legal; D = (0) yields one full layer.
    const Graph k2 = complete_graph(2);
    EXPECT_THROW(construct_direct_witness(k2, {0, 1}, k2, {0, 1}), ParameterError);
    EXPECT_EQ(construct_direct_witness(k2, {0}, k2, {0, 1}).size(), 2u);
    EXPECT_THROW(construct_direct_witness(g, optimum(g), path_graph(1), {0}), ParameterError);
}

TEST(Constructions, Strong) {
    const Graph g = path_graph(3);
    const Graph h = cycle_graph(5);
    const auto s = construct_strong_witness(g, optimum(g), h, optimum(h));
    expect_dominating(product(ProductKind::strong, g, h).graph, s, 6);
}

TEST(Constructions, RandomFactorsYieldLegalWitnesses) {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 20; ++i) {
        const Graph g = gdom::testing::random_graph(rng, 2 + i % 4, 0.6);
        const Graph h = gdom::testing::random_graph(rng, 2 + (i / 3) % 3, 0.6);
        const auto sg = optimum(g);
        const auto sh = optimum(h);
        const auto cart = construct_cartesian_witness(g, h, sg);
        const auto rc = check_sequence(product(ProductKind::cartesian, g, h).graph, cart, Mode::closed);
        EXPECT_TRUE(rc.legal) << i;
        if (cart.size() == sg.size() * h.order()) {
            EXPECT_TRUE(rc.dominating) << i;
        }
        expect_dominating(product(ProductKind::strong, g, h).graph, construct_strong_witness(g, sg, h, sh),
                          sg.size() * sh.size());
        const auto lex = construct_lex_witness(g, sg, h, sh);
        const auto rl = check_sequence(product(ProductKind::lexicographic, g, h).graph, lex, Mode::closed);
        EXPECT_TRUE(rl.legal && rl.dominating) << i;
        if (!has_isolated_vertex(h)) {
            const auto dir = construct_direct_witness(g, sg, h, optimum(h, Mode::open));
            const auto rd = check_sequence(product(ProductKind::direct, g, h).graph, dir, Mode::closed);
            EXPECT_TRUE(rd.legal) << i;
        }
    }
}

namespace {

std::vector<Graph> small_families(std::size_t max_order) {
    std::vector<Graph> out;
    for (std::size_t k = 2; k <= max_order; ++k) {
        out.push_back(path_graph(k));
        if (k >= 3) {
            out.push_back(cycle_graph(k));
        }
    }
    return out;
}

} // namespace

TEST(Constructions, CartesianSweepOverPathsAndCycles) {
    for (const Graph& g : small_families(8)) {
        for (const Graph& h : small_families(8)) {
            const auto sg = optimum(g);
            expect_dominating(product(ProductKind::cartesian, g, h).graph, construct_cartesian_witness(g, h, sg),
                              sg.size() * h.order());
        }
    }
}

TEST(Constructions, LexAndStrongSweep) {
    std::vector<Graph> fs = small_families(6);
    for (std::size_t n = 1; n <= 4; ++n) {
        for (const Graph& g : enumerate_connected_graphs(n)) {
            fs.push_back(g);
        }
    }
    fs.push_back(star_graph(5));
    fs.push_back(complete_graph(5));
    for (const Graph& g : fs) {
        for (const Graph& h : fs) {
            const auto sg = optimum(g);
            const auto sh = optimum(h);
            expect_dominating(product(ProductKind::strong, g, h).graph, construct_strong_witness(g, sg, h, sh),
                              sg.size() * sh.size());
            const auto best = lex_grundy(g, sh.size());
            expect_dominating(product(ProductKind::lexicographic, g, h).graph,
                              construct_lex_witness(g, best.sequence, h, sh), best.value);
        }
    }
}

TEST(Constructions, DirectSweepOverPathsAndCycles) {
    for (const Graph& g : small_families(6)) {
        for (const Graph& h : small_families(6)) {
            const auto th = optimum(h, Mode::open);
            const auto line = direct_sequence_bound(g, h.order(), th.size());
            const auto s = construct_direct_witness(g, line.sequence, h, th);
            const auto r = check_sequence(product(ProductKind::direct, g, h).graph, s, Mode::closed);
            EXPECT_TRUE(r.legal) << g.name() << "x" << h.name();
            EXPECT_EQ(static_cast<std::int64_t>(s.size()), line.value) << g.name() << "x" << h.name();
        }
    }
}
