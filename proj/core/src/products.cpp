#include "gdom/products.hpp"

#include "gdom/errors.hpp"

namespace gdom {

std::string_view to_string(ProductKind kind) {
    switch (kind) {
    case ProductKind::cartesian: return "cartesian";
    case ProductKind::strong: return "strong";
    case ProductKind::direct: return "direct";
    case ProductKind::lexicographic: return "lex";
    }
    return "?";
}

ProductKind parse_product_kind(std::string_view text) {
    if (text == "cartesian") return ProductKind::cartesian;
    if (text == "strong") return ProductKind::strong;
    if (text == "direct") return ProductKind::direct;
    if (text == "lex" || text == "lexicographic") return ProductKind::lexicographic;
    throw ParameterError("unknown product kind \"" + std::string(text) + "\"");
}

namespace {

const char* symbol(ProductKind kind) {
    switch (kind) {
    case ProductKind::cartesian: return "[]";
    case ProductKind::strong: return "[x]";
    case ProductKind::direct: return "x";
    case ProductKind::lexicographic: return "o";
    }
    return "?";
}

bool joined(ProductKind kind, bool g_eq, bool g_adj, bool h_eq, bool h_adj) {
    switch (kind) {
    case ProductKind::cartesian: return (g_adj && h_eq) || (g_eq && h_adj);
    case ProductKind::strong: return (g_adj && h_eq) || (g_eq && h_adj) || (g_adj && h_adj);
    case ProductKind::direct: return g_adj && h_adj;
    case ProductKind::lexicographic: return g_adj || (g_eq && h_adj);
    }
    return false;
}

} // namespace

ProductDescriptor product(ProductKind kind, const Graph& g, const Graph& h) {
    if (g.order() == 0 || h.order() == 0) {
        throw ParameterError("product factors must have at least one vertex");
    }
    const std::size_t ng = g.order();
    const std::size_t nh = h.order();
    std::vector<Edge> edges;
    for (Vertex g1 = 0; g1 < ng; ++g1) {
        for (Vertex h1 = 0; h1 < nh; ++h1) {
            const Vertex a = g1 * nh + h1;
            for (Vertex g2 = g1; g2 < ng; ++g2) {
                const bool g_eq = g1 == g2;
                const bool g_adj = !g_eq && g.adjacent(g1, g2);
                if (!g_eq && !g_adj && kind != ProductKind::lexicographic) {
                    continue;
                }
                for (Vertex h2 = 0; h2 < nh; ++h2) {
                    const Vertex b = g2 * nh + h2;
                    if (b <= a) {
                        continue;
                    }
                    const bool h_eq = h1 == h2;
                    const bool h_adj = !h_eq && h.adjacent(h1, h2);
                    if (joined(kind, g_eq, g_adj, h_eq, h_adj)) {
                        edges.emplace_back(a, b);
                    }
                }
            }
        }
    }
    std::string name;
    if (!g.name().empty() && !h.name().empty()) {
        name = g.name() + symbol(kind) + h.name();
    }
    return ProductDescriptor{kind, ng, nh, Graph::from_edges(ng * nh, edges, std::move(name))};
}

Graph product_fold(ProductKind kind, std::span<const Graph> factors) {
    if (factors.empty()) {
        throw ParameterError("product_fold needs at least one factor");
    }
    Graph acc = factors.front();
    for (std::size_t i = 1; i < factors.size(); ++i) {
        acc = product(kind, acc, factors[i]).graph;
    }
    return acc;
}

VertexSet layer(const ProductDescriptor& p, LayerAxis axis, Vertex index) {
    VertexSet out(p.graph.order());
    if (axis == LayerAxis::g_layer) {
        if (index >= p.nH) {
            throw ParameterError("G-layer index " + std::to_string(index) + " out of range");
        }
        for (Vertex g = 0; g < p.nG; ++g) {
            out.set(p.index(g, index));
        }
    } else {
        if (index >= p.nG) {
            throw ParameterError("H-layer index " + std::to_string(index) + " out of range");
        }
        for (Vertex h = 0; h < p.nH; ++h) {
            out.set(p.index(index, h));
        }
    }
    return out;
}

VertexSet project(const ProductDescriptor& p, const VertexSet& s, Factor onto) {
    if (s.size() != p.graph.order()) {
        throw ParameterError("vertex set does not belong to this product");
    }
    VertexSet out(onto == Factor::g ? p.nG : p.nH);
    for (auto v = s.find_first(); v != VertexSet::npos; v = s.find_next(v)) {
        const auto [g, h] = p.coordinates(v);
        out.set(onto == Factor::g ? g : h);
    }
    return out;
}

} // namespace gdom
