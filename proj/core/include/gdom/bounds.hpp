#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gdom/graph.hpp"
#include "gdom/products.hpp"
#include "gdom/solver.hpp"

namespace gdom {

struct BoundEntry {
    std::string id;
    std::int64_t value = 0;
};

struct BoundsReport {
    std::vector<BoundEntry> lower;
    std::vector<BoundEntry> upper;
    std::optional<BoundEntry> exact;

    std::int64_t best_lower() const;
    std::optional<std::int64_t> best_upper() const;
    /// True when every lower value <= value <= every upper value.
    bool brackets(std::int64_t value) const;
    bool consistent() const;
};

struct BoundsOptions {
    SolverOptions solver;
    /// Products up to this order may be solved exactly when a bound
    /// bottoms out (simplicial recursion base case).
    std::size_t exact_base_order = 24;
    /// theta_e of the product is computed by the general solver up to this
    /// order; triangle-free products always use |E|.
    std::size_t clique_cover_order = 16;
    /// Node budget for that solver; the bound is omitted when it runs out.
    std::uint64_t clique_cover_nodes = 200000;
};

/// Every applicable named bound on gamma_gr(G * H). Ids:
///   lower: prop_cart_layers, ex_cart_complete, prop_lex_independence,
///          prop_direct_sequences, prop_strong_product
///   upper: trivial_order, prop_edge_clique_cover, lex_product_upper,
///          prop_strong_min_layers, prop_simplicial_left, prop_simplicial_right
///   exact: thm_lex_formula (lexicographic only)
BoundsReport product_bounds(ProductKind kind, const Graph& g, const Graph& h,
                            const BoundsOptions& options = {});

/// Upper bound on gamma_gr(G [x] H) by repeatedly deleting a simplicial vertex
/// of G (smallest id first) while more than two vertices remain, adding
/// gamma_gr(H) per deletion. The remainder R is bounded by an exact solve of
/// R [x] H when it is small, else by min(|R| gamma(H), gamma(R) |H|).
std::int64_t strong_simplicial_upper(const Graph& g, const Graph& h, std::size_t gamma_h,
                                     const BoundsOptions& options = {});

/// max over dominating sequences D of g of
///   a(D) |V(H)| + gamma_t(H) (|D| - a(D)).
struct DirectLine {
    std::int64_t value = 0;
    VertexSequence sequence;
};
DirectLine direct_sequence_bound(const Graph& g, std::size_t order_h, std::size_t gamma_total_h,
                                 const SolverOptions& options = {});

enum class BoundaryMode { certified, sampled };

struct BoundaryBound {
    /// Minimum |boundary(A)| over the examined m-subsets A.
    std::size_t min_boundary = 0;
    /// |V| - min_boundary; a proven upper bound only when certified.
    std::size_t gamma_upper = 0;
    bool certified = false;
    std::uint64_t subsets_examined = 0;
};

/// Certified mode enumerates all m-subsets (guarded to C(n, m) <= 10^7).
/// Sampled mode draws `samples` random subsets and never certifies.
BoundaryBound boundary_sufficient_bound(const Graph& g, std::size_t m,
                                        BoundaryMode mode = BoundaryMode::certified,
                                        std::uint64_t samples = 0, std::uint64_t seed = 1);

} // namespace gdom
