#include "gdom/isoperimetric.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "gdom/errors.hpp"
#include "gdom/products.hpp"

namespace gdom {

Graph iso_host_graph(IsoKind kind, const std::vector<std::size_t>& factors) {
    if (factors.empty()) {
        throw ParameterError("isoperimetric host needs at least one factor");
    }
    std::vector<Graph> gs;
    for (std::size_t k : factors) {
        if (kind == IsoKind::even_torus) {
            if (k < 2) {
                throw ParameterError("even torus factors C_{2k} need k >= 2");
            }
            gs.push_back(cycle_graph(2 * k));
        } else {
            if (k < 1) {
                throw ParameterError("grid factors need k >= 1");
            }
            gs.push_back(path_graph(k));
        }
    }
    return product_fold(ProductKind::cartesian, gs);
}

IsoReport isoperimetric_check(const IsoConfig& cfg) {
    std::size_t order = 1;
    for (std::size_t k : cfg.factors) {
        order *= cfg.kind == IsoKind::even_torus ? 2 * k : k;
        if (order > cfg.max_order) {
            throw ResourceError("host order exceeds cap " + std::to_string(cfg.max_order));
        }
    }
    const Graph g = iso_host_graph(cfg.kind, cfg.factors);
    const std::size_t n = g.order();

    IsoReport rep;
    rep.order = n;
    // Tori are vertex-transitive; grids need a minimum-degree centre.
    Vertex center = 0;
    for (Vertex v = 0; v < n; ++v) {
        if (g.degree(v) < g.degree(center)) {
            center = v;
        }
    }
    rep.center = center;
    const VertexSet b = ball(g, center, cfg.radius);
    rep.ball_size = b.count();
    rep.ball_boundary = boundary(g, b).count();
    rep.min_boundary = rep.ball_boundary;
    if (rep.ball_size == n) {
        rep.trivial = true;
        return rep;
    }

    const std::size_t m = rep.ball_size;
    auto visit = [&](const VertexSet& a) {
        ++rep.checked;
        const std::size_t bd = boundary(g, a).count();
        rep.min_boundary = std::min(rep.min_boundary, bd);
        if (bd < rep.ball_boundary) {
            ++rep.violations;
        }
    };

    if (cfg.exhaustive) {
        double c = 1.0;
        for (std::size_t i = 1; i <= m; ++i) {
            c = c * static_cast<double>(n - m + i) / static_cast<double>(i);
        }
        if (c > 1e7) {
            throw ResourceError("exhaustive check over C(" + std::to_string(n) + "," + std::to_string(m) +
                                ") subsets exceeds the 10^7 guard");
        }
        std::vector<Vertex> idx(m);
        std::iota(idx.begin(), idx.end(), Vertex{0});
        while (true) {
            VertexSet a(n);
            for (Vertex v : idx) {
                a.set(v);
            }
            visit(a);
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
    } else {
        std::mt19937_64 rng(cfg.seed);
        std::vector<Vertex> all(n);
        std::iota(all.begin(), all.end(), Vertex{0});
        for (std::uint64_t s = 0; s < cfg.trials; ++s) {
            std::vector<Vertex> pick;
            std::sample(all.begin(), all.end(), std::back_inserter(pick), m, rng);
            VertexSet a(n);
            for (Vertex v : pick) {
                a.set(v);
            }
            visit(a);
        }
    }
    return rep;
}

} // namespace gdom
