#include "gdom/enumerate.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <tuple>

#include "gdom/errors.hpp"

namespace gdom {

namespace {

constexpr std::size_t pair_index(std::size_t i, std::size_t j, std::size_t n) {
    // row-major over i < j
    return i * n - i * (i + 1) / 2 + (j - i - 1);
}

std::uint64_t code_for_order(const std::vector<std::uint32_t>& rows, const std::vector<Vertex>& at,
                             std::size_t n) {
    // at[p] is the vertex placed at position p
    std::uint64_t code = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const std::uint32_t row = rows[at[i]];
        for (std::size_t j = i + 1; j < n; ++j) {
            if (row >> at[j] & 1U) {
                code |= std::uint64_t{1} << pair_index(i, j, n);
            }
        }
    }
    return code;
}

} // namespace

std::uint64_t canonical_code(const Graph& g) {
    const std::size_t n = g.order();
    if (n > kMaxCanonicalOrder) {
        throw ResourceError("canonical_code supports at most " + std::to_string(kMaxCanonicalOrder) +
                            " vertices");
    }
    if (n <= 1) {
        return 0;
    }
    std::vector<std::uint32_t> rows(n, 0);
    for (const auto& [u, v] : g.edges()) {
        rows[u] |= 1U << v;
        rows[v] |= 1U << u;
    }

    // Invariant key: degree, then the sorted degrees of the neighbours.
    using Key = std::pair<std::size_t, std::vector<std::size_t>>;
    std::vector<Key> key(n);
    for (Vertex v = 0; v < n; ++v) {
        key[v].first = g.degree(v);
        for (Vertex u : members(g.neighbors(v))) {
            key[v].second.push_back(g.degree(u));
        }
        std::sort(key[v].second.begin(), key[v].second.end());
    }
    std::vector<Vertex> at(n);
    for (Vertex v = 0; v < n; ++v) {
        at[v] = v;
    }
    std::sort(at.begin(), at.end(), [&](Vertex a, Vertex b) {
        if (key[a] != key[b]) {
            return key[a] > key[b];
        }
        return a < b;
    });
    std::vector<std::pair<std::size_t, std::size_t>> blocks; // [begin, end)
    for (std::size_t i = 0; i < n;) {
        std::size_t j = i + 1;
        while (j < n && key[at[j]] == key[at[i]]) {
            ++j;
        }
        blocks.emplace_back(i, j);
        i = j;
    }
    for (const auto& [b, e] : blocks) {
        std::sort(at.begin() + static_cast<std::ptrdiff_t>(b), at.begin() + static_cast<std::ptrdiff_t>(e));
    }

    std::uint64_t best = ~std::uint64_t{0};
    while (true) {
        best = std::min(best, code_for_order(rows, at, n));
        // Odometer over per-block permutations.
        std::size_t k = 0;
        for (; k < blocks.size(); ++k) {
            auto first = at.begin() + static_cast<std::ptrdiff_t>(blocks[k].first);
            auto last = at.begin() + static_cast<std::ptrdiff_t>(blocks[k].second);
            if (std::next_permutation(first, last)) {
                break;
            }
        }
        if (k == blocks.size()) {
            break;
        }
    }
    return best;
}

Graph graph_from_code(std::size_t n, std::uint64_t code) {
    std::vector<Edge> e;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (code >> pair_index(i, j, n) & 1U) {
                e.emplace_back(i, j);
            }
        }
    }
    return Graph::from_edges(n, e);
}

bool isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.size() != b.size()) {
        return false;
    }
    if (degree_sequence(a) != degree_sequence(b)) {
        return false;
    }
    return canonical_code(a) == canonical_code(b);
}

namespace {

std::vector<std::uint64_t> connected_codes(std::size_t n) {
    static std::mutex mutex;
    static std::map<std::size_t, std::vector<std::uint64_t>> cache;
    std::lock_guard lock(mutex);
    if (auto it = cache.find(n); it != cache.end()) {
        return it->second;
    }
    std::vector<std::uint64_t> level{0}; // K_1
    for (std::size_t k = 1; k < n; ++k) {
        if (auto it = cache.find(k + 1); it != cache.end()) {
            level = it->second;
            continue;
        }
        // Every connected graph on k+1 vertices has a non-cut vertex, so it
        // arises from a connected graph on k vertices plus one new vertex.
        std::set<std::uint64_t> seen;
        for (std::uint64_t code : level) {
            const Graph base = graph_from_code(k, code);
            const std::vector<Edge> base_edges = base.edges();
            for (std::uint32_t mask = 1; mask < (1U << k); ++mask) {
                std::vector<Edge> e = base_edges;
                for (Vertex u = 0; u < k; ++u) {
                    if (mask >> u & 1U) {
                        e.emplace_back(u, k);
                    }
                }
                seen.insert(canonical_code(Graph::from_edges(k + 1, e)));
            }
        }
        level.assign(seen.begin(), seen.end());
        std::stable_sort(level.begin(), level.end(), [](std::uint64_t a, std::uint64_t b) {
            return std::make_tuple(__builtin_popcountll(a), a) < std::make_tuple(__builtin_popcountll(b), b);
        });
        cache[k + 1] = level;
    }
    cache[n] = level;
    return level;
}

} // namespace

std::vector<Graph> enumerate_connected_graphs(std::size_t n, std::size_t max_n) {
    if (n == 0) {
        throw ParameterError("enumeration order must be >= 1");
    }
    if (n > max_n || n > kMaxCanonicalOrder) {
        throw ParameterError("enumeration order " + std::to_string(n) + " exceeds guard " +
                             std::to_string(std::min(max_n, kMaxCanonicalOrder)));
    }
    std::vector<Graph> out;
    std::size_t index = 0;
    for (std::uint64_t code : connected_codes(n)) {
        out.push_back(graph_from_code(n, code).renamed("g" + std::to_string(n) + "_" + std::to_string(index++)));
    }
    return out;
}

} // namespace gdom
