#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace gdom {

using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;

/// Bit set over the vertex ids 0..n-1 of one graph.
using VertexSet = boost::dynamic_bitset<std::uint64_t>;

/// Ordered list of distinct vertex ids.
using VertexSequence = std::vector<Vertex>;

enum class Mode { closed, open };

/// Immutable simple undirected graph. Adjacency rows are bit sets, so
/// neighbourhood unions and containment tests are word operations.
class Graph {
public:
    Graph() = default;

    /// Builds a graph from an edge list. Rejects loops, duplicate edges and
    /// endpoints >= n with ParameterError.
    static Graph from_edges(std::size_t n, const std::vector<Edge>& edges, std::string name = {});

    std::size_t order() const noexcept { return adj_.size(); }
    std::size_t size() const noexcept { return edge_count_; }

    const VertexSet& neighbors(Vertex v) const;
    bool adjacent(Vertex u, Vertex v) const;
    std::size_t degree(Vertex v) const;

    /// Sorted edge list, each edge as (u, v) with u < v.
    std::vector<Edge> edges() const;

    VertexSet empty_set() const { return VertexSet(order()); }
    VertexSet full_set() const { return VertexSet(order()).set(); }

    const std::string& name() const noexcept { return name_; }
    Graph renamed(std::string name) const;

    friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

private:
    explicit Graph(std::vector<VertexSet> adj, std::string name);
    void check_invariants() const;

    std::vector<VertexSet> adj_;
    std::size_t edge_count_ = 0;
    std::string name_;
};

enum class Family { path, cycle, complete, star, caterpillar, custom };

/// Parameters of a standard family:
///   path/cycle/complete/star: {order}
///   caterpillar: {spine length, legs at spine vertex 0, legs at 1, ...}
///   custom: {n, u1, v1, u2, v2, ...}
struct FamilySpec {
    Family family = Family::path;
    std::vector<long long> params;
};

/// Canonical member of a family. Paths are indexed along the path, cycles
/// cyclically; caterpillars list the spine first, then legs grouped by spine
/// vertex.
Graph make_graph(const FamilySpec& spec);

Graph path_graph(std::size_t k);
Graph cycle_graph(std::size_t k);
Graph complete_graph(std::size_t k);
/// Star with k vertices in total (K_{1,k-1}); vertex 0 is the centre.
Graph star_graph(std::size_t k);
Graph caterpillar_graph(std::size_t spine, const std::vector<std::size_t>& legs);

VertexSet neighborhood(const Graph& g, Vertex v, Mode mode);

/// Vertices outside s with at least one neighbour in s.
VertexSet boundary(const Graph& g, const VertexSet& s);

/// Vertices at distance at most r from v.
VertexSet ball(const Graph& g, Vertex v, std::size_t r);

/// Exact independence number by branching on a maximum-degree vertex.
/// Intended for n up to about 30.
std::size_t independence_number(const Graph& g);

/// A maximum independent set, lexicographically smallest by vertex id.
VertexSequence maximum_independent_set(const Graph& g);

bool is_simplicial(const Graph& g, Vertex v);
bool is_connected(const Graph& g);
bool is_tree(const Graph& g);
bool is_caterpillar(const Graph& g);
bool is_complete(const Graph& g);
bool is_triangle_free(const Graph& g);
bool has_isolated_vertex(const Graph& g);

/// Replaces v by a clique on l vertices, each adjacent to all of N(v).
/// The first clique vertex keeps the id v; the other l-1 are appended.
Graph substitute_clique(const Graph& g, Vertex v, std::size_t l);

/// G - v with the remaining vertices renumbered in increasing order.
Graph remove_vertex(const Graph& g, Vertex v);

/// Vertices of a are 0..|a|-1, vertices of b follow.
Graph disjoint_union(const Graph& a, const Graph& b);

/// Degree multiset, sorted ascending.
std::vector<std::size_t> degree_sequence(const Graph& g);

std::string to_string(const VertexSet& s);
std::vector<Vertex> members(const VertexSet& s);

} // namespace gdom
