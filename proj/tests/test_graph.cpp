#include <gtest/gtest.h>

#include "gdom/errors.hpp"
#include "gdom/graph.hpp"
#include "gdom/solver.hpp"
#include "helpers.hpp"

using namespace gdom;
using gdom::testing::set_of;

TEST(Graph, RejectsLoopsDuplicatesAndRange) {
    EXPECT_THROW(Graph::from_edges(3, {{0, 0}}), ParameterError);
    EXPECT_THROW(Graph::from_edges(3, {{0, 1}, {1, 0}}), ParameterError);
    EXPECT_THROW(Graph::from_edges(3, {{0, 3}}), ParameterError);
    EXPECT_NO_THROW(Graph::from_edges(1, {}));
}

TEST(Graph, FamilyShapes) {
    const Graph p4 = path_graph(4);
    EXPECT_EQ(p4.order(), 4u);
    EXPECT_EQ(p4.edges(), (std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}}));
    EXPECT_EQ(cycle_graph(3), complete_graph(3));
    EXPECT_THROW(cycle_graph(2), ParameterError);
    EXPECT_THROW(make_graph({Family::cycle, {1}}), ParameterError);

    const Graph cat = caterpillar_graph(2, {1, 1});
    EXPECT_EQ(cat.order(), 4u);
    EXPECT_EQ(cat.size(), 3u);
    std::size_t leaves = 0;
    for (Vertex v = 0; v < cat.order(); ++v) {
        leaves += cat.degree(v) == 1;
    }
    EXPECT_EQ(leaves, 2u);

    const Graph s = star_graph(4);
    EXPECT_EQ(s.degree(0), 3u);
    const Graph custom = make_graph({Family::custom, {3, 0, 2}});
    EXPECT_TRUE(custom.adjacent(0, 2));
    EXPECT_FALSE(custom.adjacent(0, 1));
}

TEST(Graph, Neighborhoods) {
    const Graph p3 = path_graph(3);
    EXPECT_EQ(neighborhood(p3, 1, Mode::closed), set_of(3, {0, 1, 2}));
    EXPECT_EQ(neighborhood(p3, 0, Mode::open), set_of(3, {1}));
    EXPECT_EQ(neighborhood(complete_graph(4), 2, Mode::closed).count(), 4u);
    EXPECT_THROW(neighborhood(p3, 3, Mode::open), ParameterError);
}

TEST(Graph, Boundary) {
    EXPECT_EQ(boundary(path_graph(4), set_of(4, {1})), set_of(4, {0, 2}));
    EXPECT_EQ(boundary(cycle_graph(4), set_of(4, {0})), set_of(4, {1, 3}));
    EXPECT_EQ(boundary(path_graph(3), set_of(3, {0, 1})), set_of(3, {2}));
}

TEST(Graph, Balls) {
    EXPECT_EQ(ball(path_graph(5), 2, 1), set_of(5, {1, 2, 3}));
    EXPECT_EQ(ball(cycle_graph(6), 0, 2), set_of(6, {4, 5, 0, 1, 2}));
    EXPECT_EQ(ball(cycle_graph(6), 3, 0), set_of(6, {3}));
}

TEST(Graph, BallMonotoneAndStabilises) {
    const Graph g = disjoint_union(path_graph(5), cycle_graph(4));
    VertexSet prev = ball(g, 1, 0);
    for (std::size_t r = 1; r < 8; ++r) {
        const VertexSet cur = ball(g, 1, r);
        EXPECT_TRUE(prev.is_subset_of(cur));
        prev = cur;
    }
    EXPECT_EQ(prev, set_of(9, {0, 1, 2, 3, 4}));
}

TEST(Graph, IndependenceNumber) {
    EXPECT_EQ(independence_number(cycle_graph(5)), 2u);
    EXPECT_EQ(independence_number(complete_graph(6)), 1u);
    EXPECT_EQ(independence_number(gdom::testing::spider_tree()), 5u);
    EXPECT_EQ(independence_number(path_graph(7)), 4u);
}

TEST(Graph, Simplicial) {
    EXPECT_TRUE(is_simplicial(path_graph(4), 0));
    EXPECT_FALSE(is_simplicial(path_graph(3), 1));
    EXPECT_TRUE(is_simplicial(complete_graph(4), 2));
}

TEST(Graph, Caterpillar) {
    for (std::size_t k = 1; k <= 8; ++k) {
        EXPECT_TRUE(is_caterpillar(path_graph(k))) << k;
    }
    EXPECT_TRUE(is_caterpillar(star_graph(5)));
    // spider with three legs of length two
    const Graph spider = Graph::from_edges(7, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}});
    EXPECT_FALSE(is_caterpillar(spider));
    EXPECT_FALSE(is_caterpillar(cycle_graph(4)));
}

TEST(Graph, SubstituteClique) {
    const Graph diamond = substitute_clique(path_graph(3), 1, 2);
    EXPECT_EQ(diamond.order(), 4u);
    EXPECT_EQ(diamond.size(), 5u);
    EXPECT_EQ(degree_sequence(diamond), (std::vector<std::size_t>{2, 2, 3, 3}));
    EXPECT_EQ(grundy(diamond, Mode::closed).value, 2u);
    EXPECT_EQ(grundy(path_graph(3), Mode::closed).value, 2u);

    std::mt19937_64 rng(5);
    for (int i = 0; i < 20; ++i) {
        const Graph g = gdom::testing::random_graph(rng, 6, 0.5);
        EXPECT_EQ(degree_sequence(substitute_clique(g, 2, 1)), degree_sequence(g));
    }
    EXPECT_THROW(substitute_clique(path_graph(3), 0, 0), ParameterError);
}

TEST(Graph, GeneratedGraphsAreSymmetricAndLoopless) {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 30; ++i) {
        const Graph g = gdom::testing::random_graph(rng, 9, 0.4);
        for (Vertex v = 0; v < g.order(); ++v) {
            EXPECT_FALSE(g.neighbors(v).test(v));
            for (Vertex u : members(g.neighbors(v))) {
                EXPECT_TRUE(g.neighbors(u).test(v));
            }
        }
    }
}

TEST(Graph, BoundaryDisjointAndDominatingCover) {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 40; ++i) {
        const Graph g = gdom::testing::random_graph(rng, 8, 0.35);
        VertexSet s(8);
        for (Vertex v = 0; v < 8; ++v) {
            if (rng() % 2) {
                s.set(v);
            }
        }
        const VertexSet b = boundary(g, s);
        EXPECT_FALSE(b.intersects(s));
        VertexSet closed = s;
        for (Vertex v : members(s)) {
            closed |= g.neighbors(v);
        }
        if (closed.all()) {
            EXPECT_EQ(s.count() + b.count(), g.order());
        }
    }
}

TEST(Graph, RemoveVertexAndUnion) {
    const Graph g = remove_vertex(path_graph(4), 1);
    EXPECT_EQ(g.order(), 3u);
    EXPECT_EQ(g.edges(), (std::vector<Edge>{{1, 2}}));
    const Graph u = disjoint_union(path_graph(2), path_graph(3));
    EXPECT_EQ(u.order(), 5u);
    EXPECT_TRUE(u.adjacent(2, 3));
    EXPECT_FALSE(is_connected(u));
}
