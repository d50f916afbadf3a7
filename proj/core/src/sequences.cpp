#include "gdom/sequences.hpp"

#include "gdom/errors.hpp"

namespace gdom {

namespace {

void require_distinct(const Graph& g, const VertexSequence& s) {
    VertexSet seen = g.empty_set();
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] >= g.order()) {
            throw MalformedSequenceError("item " + std::to_string(i) + " names vertex " +
                                         std::to_string(s[i]) + " outside the graph");
        }
        if (seen.test(s[i])) {
            throw MalformedSequenceError("vertex " + std::to_string(s[i]) + " repeated at item " +
                                         std::to_string(i));
        }
        seen.set(s[i]);
    }
}

} // namespace

SequenceReport check_sequence(const Graph& g, const VertexSequence& s, Mode mode) {
    require_distinct(g, s);
    if (mode == Mode::open && has_isolated_vertex(g)) {
        throw DomainError("open neighbourhood sequences need a graph without isolated vertices");
    }
    SequenceReport rep;
    rep.length = s.size();
    rep.footprinter.assign(g.order(), std::nullopt);
    rep.a_value = a_value(g, s);
    VertexSet covered = g.empty_set();
    for (std::size_t i = 0; i < s.size(); ++i) {
        const VertexSet fresh = neighborhood(g, s[i], mode) - covered;
        if (fresh.none() && !rep.first_illegal) {
            rep.first_illegal = i;
        }
        for (auto u = fresh.find_first(); u != VertexSet::npos; u = fresh.find_next(u)) {
            rep.footprinter[u] = s[i];
        }
        covered |= fresh;
    }
    rep.legal = !rep.first_illegal.has_value();
    rep.dominating = covered.all();
    return rep;
}

std::size_t a_value(const Graph& g, const VertexSequence& s) { return a_items(g, s).size(); }

VertexSequence a_items(const Graph& g, const VertexSequence& s) {
    VertexSequence out;
    VertexSet earlier = g.empty_set();
    for (Vertex v : s) {
        if (!g.neighbors(v).intersects(earlier)) {
            out.push_back(v);
        }
        earlier.set(v);
    }
    return out;
}

std::vector<std::size_t> boundary_profile(const Graph& g, const VertexSequence& s) {
    std::vector<std::size_t> out;
    VertexSet prefix = g.empty_set();
    for (Vertex v : s) {
        prefix.set(v);
        out.push_back(boundary(g, prefix).count());
    }
    return out;
}

bool is_legal_dominating(const Graph& g, const VertexSequence& s, Mode mode) {
    const SequenceReport r = check_sequence(g, s, mode);
    return r.legal && r.dominating;
}

} // namespace gdom
