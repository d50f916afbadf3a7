#pragma once

#include <cstddef>
#include <vector>

#include "gdom/graph.hpp"

namespace gdom {

/// All maximal cliques (Bron-Kerbosch with pivoting), each sorted, in
/// lexicographic order.
std::vector<VertexSequence> maximal_cliques(const Graph& g);

struct CliqueCoverOptions {
    /// Skip the triangle-free shortcut and always run the set-cover search.
    bool force_general = false;
    /// Orders above this raise ResourceError on the general route.
    std::size_t max_order = 32;
    /// Search nodes before giving up with ResourceError; 0 means no limit.
    std::uint64_t node_limit = 0;
};

/// Edge clique cover number theta_e. Triangle-free graphs return |E|
/// directly; otherwise a branch-and-bound set cover over maximal cliques.
std::size_t edge_clique_cover_number(const Graph& g, const CliqueCoverOptions& options = {});

} // namespace gdom
