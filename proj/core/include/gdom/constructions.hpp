#pragma once

#include <cstddef>
#include <utility>

#include "gdom/graph.hpp"

namespace gdom {

// Witness builders for the product lower bounds. Inputs are validated with
// check_sequence; an illegal or non-dominating input raises ParameterError.
// Output ids use the product encoding g * |V(H)| + h.

/// Each item of seqG repeated across the H vertices in id order. An item
/// that footprints some vertex other than itself takes every H vertex;
/// one that footprints only itself takes a maximum independent set of H,
/// since its copies would otherwise cover each other along H-edges. The
/// result is legal; it is dominating when no item is of the second kind.
VertexSequence construct_cartesian_witness(const Graph& g, const Graph& h,
                                           const VertexSequence& seq_g);

/// Length of construct_cartesian_witness: a certified lower bound on
/// gamma_gr(G [] H) that equals gamma_gr(G) |V(H)| unless some item of
/// seqG footprints only itself.
std::size_t cartesian_layer_bound(const Graph& g, const Graph& h, const VertexSequence& seq_g);

/// ((a1,b1), ..., (a_{n-1},b1), (a1,b2), ..., (a1,bm)) on K_n [] K_m, n, m >= 3.
VertexSequence construct_complete_grid_witness(std::size_t n, std::size_t m);

/// Centred coordinates (x, y), |x|, |y| <= t for k = 2t + 1.
using TorusPoint = std::pair<int, int>;

/// The ordered points of the odd torus construction: the diamond A1 in its
/// row order, then A2 in its column order.
std::vector<TorusPoint> odd_torus_points(std::size_t k);

/// Product id of a centred point on C_k [] C_k: (x + t) * k + (y + t).
Vertex odd_torus_vertex(std::size_t k, TorusPoint p);

/// Dominating sequence of C_k [] C_k of length k(k-2)+1 for odd k >= 3.
VertexSequence construct_odd_torus_witness(std::size_t k);

/// Items of D with no earlier D-neighbour expand to (d, s) for every s in
/// seqH; the others appear once as (d, seqH[0]).
VertexSequence construct_lex_witness(const Graph& g, const VertexSequence& d, const Graph& h,
                                     const VertexSequence& seq_h);

/// Items of D with no earlier D-neighbour contribute their whole H-layer;
/// the others contribute (d, t) for every t of the total sequence of H.
VertexSequence construct_direct_witness(const Graph& g, const VertexSequence& d, const Graph& h,
                                        const VertexSequence& total_seq_h);

/// All pairs (d_i, d'_j) in row-major order.
VertexSequence construct_strong_witness(const Graph& g, const VertexSequence& seq_g,
                                        const Graph& h, const VertexSequence& seq_h);

} // namespace gdom
