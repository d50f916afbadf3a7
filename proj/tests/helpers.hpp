#pragma once

#include <random>

#include "gdom/graph.hpp"

namespace gdom::testing {

// G(n, p) with a fixed engine so failures reproduce.
inline Graph random_graph(std::mt19937_64& rng, std::size_t n, double p) {
    std::bernoulli_distribution coin(p);
    std::vector<Edge> e;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            if (coin(rng)) {
                e.emplace_back(u, v);
            }
        }
    }
    return Graph::from_edges(n, e);
}

inline VertexSet set_of(std::size_t n, std::initializer_list<Vertex> vs) {
    VertexSet s(n);
    for (Vertex v : vs) {
        s.set(v);
    }
    return s;
}

// u-v, v adjacent to two centres, each centre with two leaves.
inline Graph spider_tree() {
    return Graph::from_edges(8, {{0, 1}, {1, 2}, {2, 3}, {2, 4}, {1, 5}, {5, 6}, {5, 7}}, "T");
}

} // namespace gdom::testing
