#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "gdom/graph.hpp"

namespace gdom {

/// Largest order accepted by canonical_code.
inline constexpr std::size_t kMaxCanonicalOrder = 11;

/// Isomorphism-invariant code of a small graph: the minimum upper-triangle
/// adjacency word over all vertex orderings that list vertices by
/// non-increasing degree. Exhaustive within each degree class.
std::uint64_t canonical_code(const Graph& g);

/// Graph whose upper-triangle word (row-major over pairs i < j) is `code`.
Graph graph_from_code(std::size_t n, std::uint64_t code);

bool isomorphic(const Graph& a, const Graph& b);

/// One representative per isomorphism class of connected graphs on n
/// vertices, each in canonical labelling, ordered by (edge count, code).
/// Representatives are named "g<n>_<index>".
///
/// Throws ParameterError when n is 0 or exceeds max_n. The default guard is
/// 7 (853 classes); 8 is feasible (11117 classes) but takes a few seconds.
std::vector<Graph> enumerate_connected_graphs(std::size_t n, std::size_t max_n = 7);

} // namespace gdom
