#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <utility>

#include "gdom/graph.hpp"

namespace gdom {

enum class ProductKind { cartesian, strong, direct, lexicographic };

std::string_view to_string(ProductKind kind);
/// Accepts "cartesian", "strong", "direct", "lex" and "lexicographic".
ProductKind parse_product_kind(std::string_view text);

/// A product graph together with its factor orders. Vertex (g, h) has the
/// id g * nH + h; this encoding is part of the public contract.
struct ProductDescriptor {
    ProductKind kind = ProductKind::cartesian;
    std::size_t nG = 0;
    std::size_t nH = 0;
    Graph graph;

    Vertex index(Vertex g, Vertex h) const { return g * nH + h; }
    std::pair<Vertex, Vertex> coordinates(Vertex v) const { return {v / nH, v % nH}; }
};

ProductDescriptor product(ProductKind kind, const Graph& g, const Graph& h);

/// Left fold over the factors; the id of (g1, ..., gk) is row-major.
Graph product_fold(ProductKind kind, std::span<const Graph> factors);

enum class LayerAxis { g_layer, h_layer };

/// g_layer with index h is the row G^h; h_layer with index g is the column ^gH.
VertexSet layer(const ProductDescriptor& p, LayerAxis axis, Vertex index);

enum class Factor { g, h };

VertexSet project(const ProductDescriptor& p, const VertexSet& s, Factor onto);

} // namespace gdom
