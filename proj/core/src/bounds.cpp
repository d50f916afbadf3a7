#include "gdom/bounds.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "gdom/clique_cover.hpp"
#include "gdom/constructions.hpp"
#include "gdom/errors.hpp"

namespace gdom {

std::int64_t BoundsReport::best_lower() const {
    std::int64_t best = 0;
    for (const auto& e : lower) {
        best = std::max(best, e.value);
    }
    return best;
}

std::optional<std::int64_t> BoundsReport::best_upper() const {
    std::optional<std::int64_t> best;
    for (const auto& e : upper) {
        if (!best || e.value < *best) {
            best = e.value;
        }
    }
    return best;
}

bool BoundsReport::brackets(std::int64_t value) const {
    if (value < best_lower()) {
        return false;
    }
    const auto ub = best_upper();
    return !ub || value <= *ub;
}

bool BoundsReport::consistent() const {
    const auto ub = best_upper();
    if (ub && best_lower() > *ub) {
        return false;
    }
    return !exact || brackets(exact->value);
}

namespace {

std::int64_t as_int(std::size_t v) { return static_cast<std::int64_t>(v); }

std::size_t gamma_of(const Graph& g, const SolverOptions& o) { return grundy(g, Mode::closed, o).value; }

} // namespace

std::int64_t strong_simplicial_upper(const Graph& g, const Graph& h, std::size_t gamma_h,
                                     const BoundsOptions& options) {
    Graph rest = g;
    std::int64_t acc = 0;
    while (rest.order() > 2) {
        Vertex pick = rest.order();
        for (Vertex v = 0; v < rest.order(); ++v) {
            if (is_simplicial(rest, v)) {
                pick = v;
                break;
            }
        }
        if (pick == rest.order()) {
            break;
        }
        rest = remove_vertex(rest, pick);
        acc += as_int(gamma_h);
    }
    if (rest.order() * h.order() <= options.exact_base_order) {
        const Graph p = product(ProductKind::strong, rest, h).graph;
        return acc + as_int(gamma_of(p, options.solver));
    }
    const std::int64_t by_h = as_int(rest.order() * gamma_h);
    const std::int64_t by_g = as_int(gamma_of(rest, options.solver) * h.order());
    return acc + std::min(by_h, by_g);
}

DirectLine direct_sequence_bound(const Graph& g, std::size_t order_h, std::size_t gamma_total_h,
                                 const SolverOptions& options) {
    const auto r = max_weighted_sequence(g, order_h, gamma_total_h, options);
    return {as_int(r.value), r.sequence};
}

BoundsReport product_bounds(ProductKind kind, const Graph& g, const Graph& h, const BoundsOptions& options) {
    if (g.order() == 0 || h.order() == 0) {
        throw ParameterError("product factors must have at least one vertex");
    }
    const SolverOptions& so = options.solver;
    const std::size_t ng = g.order();
    const std::size_t nh = h.order();
    const std::size_t gg = gamma_of(g, so);
    const std::size_t gh = gamma_of(h, so);

    BoundsReport rep;
    rep.upper.push_back({"trivial_order", as_int(ng * nh)});

    switch (kind) {
    case ProductKind::cartesian:
        // Replicated layers, with the self-footprinting correction; equals
        // max(gamma(G)|V(H)|, gamma(H)|V(G)|) whenever that bound is sound.
        rep.lower.push_back({"prop_cart_layers",
                             as_int(std::max(cartesian_layer_bound(g, h, grundy(g, Mode::closed, so).witness),
                                             cartesian_layer_bound(h, g, grundy(h, Mode::closed, so).witness)))});
        if (is_complete(g) && is_complete(h) && ng >= 3 && nh >= 3) {
            rep.lower.push_back({"ex_cart_complete", as_int(ng + nh - 2)});
        }
        break;
    case ProductKind::lexicographic: {
        rep.lower.push_back({"prop_lex_independence", as_int(std::max(independence_number(g) * gh, gg))});
        rep.upper.push_back({"lex_product_upper", as_int(gg * gh)});
        const auto lex = lex_grundy(g, gh, so);
        rep.exact = BoundEntry{"thm_lex_formula", as_int(lex.value)};
        break;
    }
    case ProductKind::direct: {
        // Each line needs the total Grundy number of the other factor.
        std::int64_t best = -1;
        if (!has_isolated_vertex(h)) {
            const std::size_t th = grundy(h, Mode::open, so).value;
            best = std::max(best, direct_sequence_bound(g, nh, th, so).value);
        }
        if (!has_isolated_vertex(g)) {
            const std::size_t tg = grundy(g, Mode::open, so).value;
            best = std::max(best, direct_sequence_bound(h, ng, tg, so).value);
        }
        if (best >= 0) {
            rep.lower.push_back({"prop_direct_sequences", best});
        }
        break;
    }
    case ProductKind::strong:
        rep.lower.push_back({"prop_strong_product", as_int(gg * gh)});
        rep.upper.push_back({"prop_strong_min_layers", as_int(std::min(ng * gh, gg * nh))});
        rep.upper.push_back({"prop_simplicial_left", strong_simplicial_upper(g, h, gh, options)});
        rep.upper.push_back({"prop_simplicial_right", strong_simplicial_upper(h, g, gg, options)});
        break;
    }

    // gamma_gr <= theta_e for the product when it has no isolated vertex.
    const Graph p = product(kind, g, h).graph;
    if (!has_isolated_vertex(p)) {
        std::optional<std::size_t> theta;
        if (is_triangle_free(p)) {
            theta = p.size();
        } else if (kind == ProductKind::strong && is_triangle_free(g) && is_triangle_free(h) &&
                   !has_isolated_vertex(g) && !has_isolated_vertex(h)) {
            theta = g.size() * h.size();
        } else if (p.order() <= options.clique_cover_order) {
            // Optional bound: omitted when the cover search runs too long.
            try {
                theta = edge_clique_cover_number(p, {.force_general = true,
                                                     .max_order = options.clique_cover_order,
                                                     .node_limit = options.clique_cover_nodes});
            } catch (const ResourceError&) {
            }
        }
        if (theta) {
            rep.upper.push_back({"prop_edge_clique_cover", as_int(*theta)});
        }
    }
    return rep;
}

namespace {

double binomial(std::size_t n, std::size_t m) {
    double c = 1.0;
    for (std::size_t i = 1; i <= m; ++i) {
        c = c * static_cast<double>(n - m + i) / static_cast<double>(i);
    }
    return c;
}

} // namespace

BoundaryBound boundary_sufficient_bound(const Graph& g, std::size_t m, BoundaryMode mode, std::uint64_t samples,
                                        std::uint64_t seed) {
    const std::size_t n = g.order();
    if (m == 0 || m > n) {
        throw ParameterError("subset size m must satisfy 1 <= m <= |V|");
    }
    BoundaryBound out;
    out.min_boundary = n;
    auto visit = [&](const VertexSet& a) {
        ++out.subsets_examined;
        out.min_boundary = std::min(out.min_boundary, boundary(g, a).count());
    };

    if (mode == BoundaryMode::certified) {
        if (binomial(n, m) > 1e7) {
            throw ResourceError("C(" + std::to_string(n) + "," + std::to_string(m) +
                                ") exceeds the 10^7 exhaustive guard");
        }
        std::vector<Vertex> idx(m);
        std::iota(idx.begin(), idx.end(), Vertex{0});
        while (true) {
            VertexSet a(n);
            for (Vertex v : idx) {
                a.set(v);
            }
            visit(a);
            if (out.min_boundary == 0) {
                break;
            }
            std::size_t i = m;
            while (i > 0 && idx[i - 1] == n - m + i - 1) {
                --i;
            }
            if (i == 0) {
                break;
            }
            ++idx[i - 1];
            for (std::size_t j = i; j < m; ++j) {
                idx[j] = idx[j - 1] + 1;
            }
        }
        out.certified = true;
    } else {
        if (samples == 0) {
            throw ParameterError("sampled mode needs at least one sample");
        }
        std::mt19937_64 rng(seed);
        std::vector<Vertex> all(n);
        std::iota(all.begin(), all.end(), Vertex{0});
        for (std::uint64_t s = 0; s < samples; ++s) {
            std::vector<Vertex> pick;
            std::sample(all.begin(), all.end(), std::back_inserter(pick), m, rng);
            VertexSet a(n);
            for (Vertex v : pick) {
                a.set(v);
            }
            visit(a);
        }
        out.certified = false;
    }
    out.gamma_upper = n - out.min_boundary;
    return out;
}

} // namespace gdom
