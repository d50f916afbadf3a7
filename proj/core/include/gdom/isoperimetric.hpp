#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "gdom/graph.hpp"

namespace gdom {

enum class IsoKind {
    /// C_{2k_1} [] ... [] C_{2k_n}
    even_torus,
    /// P_{k_1} [] ... [] P_{k_n}, ball centred at a minimum-degree vertex
    grid,
};

struct IsoConfig {
    IsoKind kind = IsoKind::grid;
    std::vector<std::size_t> factors;
    std::size_t radius = 1;
    /// Random subsets to draw; ignored when exhaustive.
    std::uint64_t trials = 500;
    bool exhaustive = false;
    std::uint64_t seed = 1;
    std::size_t max_order = 256;
};

struct IsoReport {
    std::size_t order = 0;
    Vertex center = 0;
    std::size_t ball_size = 0;
    std::size_t ball_boundary = 0;
    std::uint64_t checked = 0;
    std::uint64_t violations = 0;
    /// Smallest boundary seen among the checked subsets (ball_boundary if none).
    std::size_t min_boundary = 0;
    /// The ball is the whole graph, so the inequality is trivial.
    bool trivial = false;
};

Graph iso_host_graph(IsoKind kind, const std::vector<std::size_t>& factors);

/// Compares |boundary(A)| against |boundary(ball)| for subsets A of ball size.
IsoReport isoperimetric_check(const IsoConfig& config);

} // namespace gdom
