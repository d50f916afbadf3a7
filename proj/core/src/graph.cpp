#include "gdom/graph.hpp"

#include <algorithm>
#include <sstream>

#include "gdom/errors.hpp"

namespace gdom {

Graph::Graph(std::vector<VertexSet> adj, std::string name)
    : adj_(std::move(adj)), name_(std::move(name)) {
    std::size_t twice = 0;
    for (const auto& row : adj_) {
        twice += row.count();
    }
    edge_count_ = twice / 2;
    check_invariants();
}

void Graph::check_invariants() const {
    const std::size_t n = adj_.size();
    for (Vertex v = 0; v < n; ++v) {
        if (adj_[v].size() != n) {
            throw std::logic_error("adjacency row has wrong width");
        }
        if (adj_[v].test(v)) {
            throw std::logic_error("adjacency has a loop");
        }
        for (auto u = adj_[v].find_first(); u != VertexSet::npos; u = adj_[v].find_next(u)) {
            if (!adj_[u].test(v)) {
                throw std::logic_error("adjacency is not symmetric");
            }
        }
    }
}

Graph Graph::from_edges(std::size_t n, const std::vector<Edge>& edges, std::string name) {
    std::vector<VertexSet> adj(n, VertexSet(n));
    for (const auto& [u, v] : edges) {
        if (u >= n || v >= n) {
            throw ParameterError("edge endpoint out of range: " + std::to_string(u) + " " +
                                 std::to_string(v));
        }
        if (u == v) {
            throw ParameterError("self-loop at vertex " + std::to_string(u));
        }
        if (adj[u].test(v)) {
            throw ParameterError("duplicate edge " + std::to_string(u) + " " + std::to_string(v));
        }
        adj[u].set(v);
        adj[v].set(u);
    }
    return Graph(std::move(adj), std::move(name));
}

const VertexSet& Graph::neighbors(Vertex v) const {
    if (v >= order()) {
        throw ParameterError("vertex " + std::to_string(v) + " out of range");
    }
    return adj_[v];
}

bool Graph::adjacent(Vertex u, Vertex v) const {
    if (v >= order()) {
        throw ParameterError("vertex " + std::to_string(v) + " out of range");
    }
    return neighbors(u).test(v);
}

std::size_t Graph::degree(Vertex v) const { return neighbors(v).count(); }

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < order(); ++u) {
        for (auto v = adj_[u].find_next(u); v != VertexSet::npos; v = adj_[u].find_next(v)) {
            out.emplace_back(u, v);
        }
    }
    return out;
}

Graph Graph::renamed(std::string name) const {
    Graph copy = *this;
    copy.name_ = std::move(name);
    return copy;
}

Graph path_graph(std::size_t k) {
    if (k < 1) {
        throw ParameterError("path order must be >= 1");
    }
    std::vector<Edge> e;
    for (Vertex i = 0; i + 1 < k; ++i) {
        e.emplace_back(i, i + 1);
    }
    return Graph::from_edges(k, e, "P" + std::to_string(k));
}

Graph cycle_graph(std::size_t k) {
    if (k < 3) {
        throw ParameterError("cycle order must be >= 3");
    }
    std::vector<Edge> e;
    for (Vertex i = 0; i + 1 < k; ++i) {
        e.emplace_back(i, i + 1);
    }
    e.emplace_back(0, k - 1);
    return Graph::from_edges(k, e, "C" + std::to_string(k));
}

Graph complete_graph(std::size_t k) {
    if (k < 1) {
        throw ParameterError("complete graph order must be >= 1");
    }
    std::vector<Edge> e;
    for (Vertex u = 0; u < k; ++u) {
        for (Vertex v = u + 1; v < k; ++v) {
            e.emplace_back(u, v);
        }
    }
    return Graph::from_edges(k, e, "K" + std::to_string(k));
}

Graph star_graph(std::size_t k) {
    if (k < 1) {
        throw ParameterError("star order must be >= 1");
    }
    std::vector<Edge> e;
    for (Vertex v = 1; v < k; ++v) {
        e.emplace_back(0, v);
    }
    return Graph::from_edges(k, e, "S" + std::to_string(k));
}

Graph caterpillar_graph(std::size_t spine, const std::vector<std::size_t>& legs) {
    if (spine < 1) {
        throw ParameterError("caterpillar spine must be >= 1");
    }
    if (legs.size() != spine) {
        throw ParameterError("caterpillar needs one leg count per spine vertex");
    }
    std::vector<Edge> e;
    for (Vertex i = 0; i + 1 < spine; ++i) {
        e.emplace_back(i, i + 1);
    }
    Vertex next = spine;
    std::string name = "cat" + std::to_string(spine);
    for (Vertex i = 0; i < spine; ++i) {
        for (std::size_t j = 0; j < legs[i]; ++j) {
            e.emplace_back(i, next++);
        }
        name += "_" + std::to_string(legs[i]);
    }
    return Graph::from_edges(next, e, name);
}

namespace {

std::size_t as_count(long long x, const char* what) {
    if (x < 0) {
        throw ParameterError(std::string(what) + " must be non-negative");
    }
    return static_cast<std::size_t>(x);
}

std::size_t single_param(const FamilySpec& spec, const char* family) {
    if (spec.params.size() != 1) {
        throw ParameterError(std::string(family) + " takes exactly one parameter (order)");
    }
    return as_count(spec.params[0], "order");
}

} // namespace

Graph make_graph(const FamilySpec& spec) {
    switch (spec.family) {
    case Family::path:
        return path_graph(single_param(spec, "path"));
    case Family::cycle:
        return cycle_graph(single_param(spec, "cycle"));
    case Family::complete:
        return complete_graph(single_param(spec, "complete"));
    case Family::star:
        return star_graph(single_param(spec, "star"));
    case Family::caterpillar: {
        if (spec.params.empty()) {
            throw ParameterError("caterpillar needs a spine length");
        }
        const std::size_t spine = as_count(spec.params[0], "spine length");
        std::vector<std::size_t> legs;
        for (std::size_t i = 1; i < spec.params.size(); ++i) {
            legs.push_back(as_count(spec.params[i], "leg count"));
        }
        return caterpillar_graph(spine, legs);
    }
    case Family::custom: {
        if (spec.params.empty() || spec.params.size() % 2 == 0) {
            throw ParameterError("custom graph takes n followed by endpoint pairs");
        }
        const std::size_t n = as_count(spec.params[0], "order");
        std::vector<Edge> e;
        for (std::size_t i = 1; i + 1 < spec.params.size(); i += 2) {
            e.emplace_back(as_count(spec.params[i], "endpoint"), as_count(spec.params[i + 1], "endpoint"));
        }
        return Graph::from_edges(n, e, "custom");
    }
    }
    throw ParameterError("unknown family");
}

VertexSet neighborhood(const Graph& g, Vertex v, Mode mode) {
    VertexSet s = g.neighbors(v);
    if (mode == Mode::closed) {
        s.set(v);
    }
    return s;
}

namespace {

void require_width(const Graph& g, const VertexSet& s) {
    if (s.size() != g.order()) {
        throw ParameterError("vertex set width " + std::to_string(s.size()) +
                             " does not match graph order " + std::to_string(g.order()));
    }
}

} // namespace

VertexSet boundary(const Graph& g, const VertexSet& s) {
    require_width(g, s);
    VertexSet out = g.empty_set();
    for (auto v = s.find_first(); v != VertexSet::npos; v = s.find_next(v)) {
        out |= g.neighbors(v);
    }
    out -= s;
    return out;
}

VertexSet ball(const Graph& g, Vertex v, std::size_t r) {
    if (v >= g.order()) {
        throw ParameterError("vertex " + std::to_string(v) + " out of range");
    }
    VertexSet seen = g.empty_set();
    seen.set(v);
    VertexSet frontier = seen;
    for (std::size_t step = 0; step < r && frontier.any(); ++step) {
        VertexSet next = g.empty_set();
        for (auto u = frontier.find_first(); u != VertexSet::npos; u = frontier.find_next(u)) {
            next |= g.neighbors(u);
        }
        next -= seen;
        seen |= next;
        frontier = std::move(next);
    }
    return seen;
}

namespace {

std::size_t alpha_rec(const Graph& g, VertexSet cand) {
    // Vertices of degree <= 1 within cand can always be taken.
    std::size_t forced = 0;
    bool changed = true;
    while (changed) {
        changed = false;
        for (auto v = cand.find_first(); v != VertexSet::npos; v = cand.find_next(v)) {
            if ((g.neighbors(v) & cand).count() <= 1) {
                ++forced;
                cand -= g.neighbors(v);
                cand.reset(v);
                changed = true;
                break;
            }
        }
    }
    if (cand.none()) {
        return forced;
    }
    Vertex pick = cand.find_first();
    std::size_t best_deg = 0;
    for (auto v = cand.find_first(); v != VertexSet::npos; v = cand.find_next(v)) {
        const std::size_t d = (g.neighbors(v) & cand).count();
        if (d > best_deg) {
            best_deg = d;
            pick = v;
        }
    }
    VertexSet without = cand;
    without.reset(pick);
    VertexSet with = cand - g.neighbors(pick);
    with.reset(pick);
    return forced + std::max(alpha_rec(g, without), 1 + alpha_rec(g, with));
}

} // namespace

std::size_t independence_number(const Graph& g) { return alpha_rec(g, g.full_set()); }

VertexSequence maximum_independent_set(const Graph& g) {
    VertexSequence out;
    VertexSet cand = g.full_set();
    std::size_t need = alpha_rec(g, cand);
    for (Vertex v = 0; v < g.order() && need > 0; ++v) {
        if (!cand.test(v)) {
            continue;
        }
        VertexSet rest = cand - g.neighbors(v);
        rest.reset(v);
        if (1 + alpha_rec(g, rest) == need) {
            out.push_back(v);
            cand = rest;
            --need;
        }
    }
    return out;
}

bool is_simplicial(const Graph& g, Vertex v) {
    const VertexSet& nv = g.neighbors(v);
    for (auto u = nv.find_first(); u != VertexSet::npos; u = nv.find_next(u)) {
        VertexSet rest = nv;
        rest.reset(u);
        if (!rest.is_subset_of(g.neighbors(u))) {
            return false;
        }
    }
    return true;
}

bool is_connected(const Graph& g) {
    if (g.order() == 0) {
        return true;
    }
    return ball(g, 0, g.order()).all();
}

bool is_tree(const Graph& g) { return g.order() >= 1 && g.size() + 1 == g.order() && is_connected(g); }

bool is_caterpillar(const Graph& g) {
    if (!is_tree(g)) {
        return false;
    }
    VertexSet non_leaf = g.empty_set();
    for (Vertex v = 0; v < g.order(); ++v) {
        if (g.degree(v) >= 2) {
            non_leaf.set(v);
        }
    }
    for (Vertex v = 0; v < g.order(); ++v) {
        if ((g.neighbors(v) & non_leaf).count() > 2) {
            return false;
        }
    }
    return true;
}

bool is_complete(const Graph& g) {
    const std::size_t n = g.order();
    return g.size() == n * (n == 0 ? 0 : n - 1) / 2;
}

bool is_triangle_free(const Graph& g) {
    for (const auto& [u, v] : g.edges()) {
        if (g.neighbors(u).intersects(g.neighbors(v))) {
            return false;
        }
    }
    return true;
}

bool has_isolated_vertex(const Graph& g) {
    for (Vertex v = 0; v < g.order(); ++v) {
        if (g.neighbors(v).none()) {
            return true;
        }
    }
    return false;
}

Graph substitute_clique(const Graph& g, Vertex v, std::size_t l) {
    if (v >= g.order()) {
        throw ParameterError("vertex " + std::to_string(v) + " out of range");
    }
    if (l == 0) {
        throw ParameterError("clique size must be >= 1");
    }
    const std::size_t n = g.order() + l - 1;
    std::vector<Edge> e = g.edges();
    std::vector<Vertex> copies{v};
    for (std::size_t i = 1; i < l; ++i) {
        copies.push_back(g.order() + i - 1);
    }
    const VertexSet& nv = g.neighbors(v);
    for (std::size_t i = 1; i < l; ++i) {
        for (auto u = nv.find_first(); u != VertexSet::npos; u = nv.find_next(u)) {
            e.emplace_back(u, copies[i]);
        }
    }
    for (std::size_t i = 0; i < l; ++i) {
        for (std::size_t j = i + 1; j < l; ++j) {
            e.emplace_back(copies[i], copies[j]);
        }
    }
    return Graph::from_edges(n, e, g.name().empty() ? "" : g.name() + "_sub");
}

Graph remove_vertex(const Graph& g, Vertex v) {
    if (v >= g.order()) {
        throw ParameterError("vertex " + std::to_string(v) + " out of range");
    }
    auto shift = [v](Vertex u) { return u > v ? u - 1 : u; };
    std::vector<Edge> e;
    for (const auto& [a, b] : g.edges()) {
        if (a != v && b != v) {
            e.emplace_back(shift(a), shift(b));
        }
    }
    return Graph::from_edges(g.order() - 1, e);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    std::vector<Edge> e = a.edges();
    for (const auto& [u, v] : b.edges()) {
        e.emplace_back(u + a.order(), v + a.order());
    }
    return Graph::from_edges(a.order() + b.order(), e, a.name() + "+" + b.name());
}

std::vector<std::size_t> degree_sequence(const Graph& g) {
    std::vector<std::size_t> d;
    for (Vertex v = 0; v < g.order(); ++v) {
        d.push_back(g.degree(v));
    }
    std::sort(d.begin(), d.end());
    return d;
}

std::vector<Vertex> members(const VertexSet& s) {
    std::vector<Vertex> out;
    for (auto v = s.find_first(); v != VertexSet::npos; v = s.find_next(v)) {
        out.push_back(v);
    }
    return out;
}

std::string to_string(const VertexSet& s) {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (Vertex v : members(s)) {
        os << (first ? "" : ",") << v;
        first = false;
    }
    os << '}';
    return os.str();
}

} // namespace gdom
