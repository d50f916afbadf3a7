#include "gdom/clique_cover.hpp"

#include <algorithm>
#include <iterator>
#include <map>

#include "gdom/errors.hpp"

namespace gdom {

namespace {

void bron_kerbosch(const Graph& g, VertexSet r, VertexSet p, VertexSet x, std::vector<VertexSequence>& out) {
    if (p.none() && x.none()) {
        out.push_back(members(r));
        return;
    }
    // Pivot: the vertex of P u X with most neighbours in P.
    const VertexSet px = p | x;
    Vertex pivot = px.find_first();
    std::size_t best = 0;
    for (auto u = px.find_first(); u != VertexSet::npos; u = px.find_next(u)) {
        const std::size_t c = (p & g.neighbors(u)).count();
        if (c > best) {
            best = c;
            pivot = u;
        }
    }
    const VertexSet cand = p - g.neighbors(pivot);
    for (auto v = cand.find_first(); v != VertexSet::npos; v = cand.find_next(v)) {
        VertexSet r2 = r;
        r2.set(v);
        bron_kerbosch(g, r2, p & g.neighbors(v), x & g.neighbors(v), out);
        p.reset(v);
        x.set(v);
    }
}

struct CoverSearch {
    std::size_t m = 0;
    std::vector<Edge> edges;
    std::vector<VertexSet> clique_edges; // edge-index sets per maximal clique
    std::vector<std::vector<std::size_t>> cliques_of_edge;
    std::vector<VertexSet> compatible; // edge i, j lie in a common clique
    std::size_t best = 0;
    std::uint64_t nodes = 0;
    std::uint64_t node_limit = 0;
    // Least clique count already spent reaching each uncovered set.
    std::map<std::vector<VertexSet::block_type>, std::size_t> seen;

    void greedy() {
        VertexSet uncovered(m);
        uncovered.set();
        std::size_t used = 0;
        while (uncovered.any()) {
            std::size_t pick = 0;
            std::size_t gain = 0;
            for (std::size_t c = 0; c < clique_edges.size(); ++c) {
                const std::size_t g = (clique_edges[c] & uncovered).count();
                if (g > gain) {
                    gain = g;
                    pick = c;
                }
            }
            uncovered -= clique_edges[pick];
            ++used;
        }
        best = std::min(best, used);
    }

    std::size_t lower_bound(const VertexSet& uncovered) const {
        // Pairwise incompatible uncovered edges need distinct cliques.
        VertexSet pool = uncovered;
        std::size_t lb = 0;
        for (auto e = pool.find_first(); e != VertexSet::npos; e = pool.find_next(e)) {
            ++lb;
            pool -= compatible[e];
        }
        return lb;
    }

    void run(const VertexSet& uncovered, std::size_t used) {
        if (node_limit && ++nodes > node_limit) {
            throw ResourceError("edge clique cover search exceeded " + std::to_string(node_limit) + " nodes");
        }
        if (uncovered.none()) {
            best = std::min(best, used);
            return;
        }
        std::vector<VertexSet::block_type> key;
        boost::to_block_range(uncovered, std::back_inserter(key));
        if (auto [it, fresh] = seen.emplace(std::move(key), used); !fresh) {
            if (it->second <= used) {
                return;
            }
            it->second = used;
        }
        if (used + lower_bound(uncovered) >= best) {
            return;
        }
        // Branch on the uncovered edge with fewest covering cliques.
        std::size_t pick = uncovered.find_first();
        for (auto e = uncovered.find_first(); e != VertexSet::npos; e = uncovered.find_next(e)) {
            if (cliques_of_edge[e].size() < cliques_of_edge[pick].size()) {
                pick = e;
            }
        }
        std::vector<std::size_t> order = cliques_of_edge[pick];
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return (clique_edges[a] & uncovered).count() > (clique_edges[b] & uncovered).count();
        });
        for (std::size_t c : order) {
            run(uncovered - clique_edges[c], used + 1);
        }
    }
};

} // namespace

std::vector<VertexSequence> maximal_cliques(const Graph& g) {
    std::vector<VertexSequence> out;
    if (g.order() == 0) {
        return out;
    }
    bron_kerbosch(g, g.empty_set(), g.full_set(), g.empty_set(), out);
    std::sort(out.begin(), out.end());
    return out;
}

std::size_t edge_clique_cover_number(const Graph& g, const CliqueCoverOptions& options) {
    if (g.size() == 0) {
        return 0;
    }
    if (!options.force_general && is_triangle_free(g)) {
        return g.size();
    }
    if (g.order() > options.max_order) {
        throw ResourceError("edge clique cover search limited to order " + std::to_string(options.max_order));
    }
    CoverSearch cs;
    cs.edges = g.edges();
    cs.m = cs.edges.size();
    std::vector<std::vector<std::size_t>> edge_id(g.order(), std::vector<std::size_t>(g.order(), 0));
    for (std::size_t i = 0; i < cs.m; ++i) {
        const auto [u, v] = cs.edges[i];
        edge_id[u][v] = edge_id[v][u] = i;
    }
    cs.cliques_of_edge.assign(cs.m, {});
    for (const auto& q : maximal_cliques(g)) {
        if (q.size() < 2) {
            continue;
        }
        VertexSet es(cs.m);
        for (std::size_t a = 0; a < q.size(); ++a) {
            for (std::size_t b = a + 1; b < q.size(); ++b) {
                es.set(edge_id[q[a]][q[b]]);
            }
        }
        for (auto e = es.find_first(); e != VertexSet::npos; e = es.find_next(e)) {
            cs.cliques_of_edge[e].push_back(cs.clique_edges.size());
        }
        cs.clique_edges.push_back(std::move(es));
    }
    cs.compatible.assign(cs.m, VertexSet(cs.m));
    for (const auto& es : cs.clique_edges) {
        for (auto e = es.find_first(); e != VertexSet::npos; e = es.find_next(e)) {
            cs.compatible[e] |= es;
        }
    }
    cs.best = cs.m; // one clique per edge always works
    cs.node_limit = options.node_limit;
    cs.greedy();
    VertexSet all(cs.m);
    all.set();
    cs.run(all, 0);
    return cs.best;
}

} // namespace gdom
