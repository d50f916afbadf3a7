#include "gdom/constructions.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "gdom/errors.hpp"
#include "gdom/sequences.hpp"

namespace gdom {

namespace {

void require_dominating(const Graph& g, const VertexSequence& s, Mode mode, const char* what) {
    const SequenceReport r = check_sequence(g, s, mode);
    if (!r.legal) {
        throw ParameterError(std::string(what) + " is not legal (item " + std::to_string(*r.first_illegal) +
                             " footprints nothing)");
    }
    if (!r.dominating) {
        throw ParameterError(std::string(what) + " is not dominating");
    }
}

} // namespace

VertexSequence construct_cartesian_witness(const Graph& g, const Graph& h, const VertexSequence& seq_g) {
    const SequenceReport r = check_sequence(g, seq_g, Mode::closed);
    require_dominating(g, seq_g, Mode::closed, "seqG");
    const std::size_t nh = h.order();
    std::vector<bool> reaches_other(g.order(), false);
    for (Vertex u = 0; u < g.order(); ++u) {
        if (*r.footprinter[u] != u) {
            reaches_other[*r.footprinter[u]] = true;
        }
    }
    VertexSequence all(nh);
    std::iota(all.begin(), all.end(), Vertex{0});
    const VertexSequence independent = maximum_independent_set(h);
    VertexSequence out;
    for (Vertex d : seq_g) {
        for (Vertex y : reaches_other[d] ? all : independent) {
            out.push_back(d * nh + y);
        }
    }
    return out;
}

std::size_t cartesian_layer_bound(const Graph& g, const Graph& h, const VertexSequence& seq_g) {
    return construct_cartesian_witness(g, h, seq_g).size();
}

VertexSequence construct_complete_grid_witness(std::size_t n, std::size_t m) {
    if (n < 3 || m < 3) {
        throw ParameterError("K_n [] K_m witness needs n, m >= 3");
    }
    VertexSequence out;
    for (Vertex a = 0; a + 1 < n; ++a) {
        out.push_back(a * m);
    }
    for (Vertex b = 1; b < m; ++b) {
        out.push_back(b);
    }
    return out;
}

std::vector<TorusPoint> odd_torus_points(std::size_t k) {
    if (k < 3 || k % 2 == 0) {
        throw ParameterError("odd torus construction needs odd k >= 3");
    }
    const int t = static_cast<int>(k - 1) / 2;
    // Doubled coordinates keep |x - 1/2| + |y| <= t - 1/2 in integers.
    auto in_a1 = [t](int x, int y) { return std::abs(2 * x - 1) + 2 * std::abs(y) <= 2 * t - 1; };

    std::vector<TorusPoint> a1;
    std::vector<TorusPoint> a2;
    for (int x = -t; x <= t; ++x) {
        for (int y = -t; y <= t; ++y) {
            if (in_a1(x, y)) {
                a1.emplace_back(x, y);
            } else if (std::abs(x) < t) {
                a2.emplace_back(x, y);
            }
        }
    }
    // Rows outward from y = 0, upper row before lower, left to right.
    std::sort(a1.begin(), a1.end(), [](const TorusPoint& p, const TorusPoint& q) {
        const auto [x, y] = p;
        const auto [xq, yq] = q;
        if (std::abs(y) != std::abs(yq)) return std::abs(y) < std::abs(yq);
        if (y != yq) return y > yq;
        return x < xq;
    });
    // Columns outward from x = 0, right column before left, bottom to top.
    std::sort(a2.begin(), a2.end(), [](const TorusPoint& p, const TorusPoint& q) {
        const auto [x, y] = p;
        const auto [xq, yq] = q;
        if (std::abs(x) != std::abs(xq)) return std::abs(x) < std::abs(xq);
        if (x != xq) return x > xq;
        return y < yq;
    });
    a1.insert(a1.end(), a2.begin(), a2.end());
    return a1;
}

Vertex odd_torus_vertex(std::size_t k, TorusPoint p) {
    const int t = static_cast<int>(k - 1) / 2;
    const auto [x, y] = p;
    if (std::abs(x) > t || std::abs(y) > t) {
        throw ParameterError("torus point outside the centred square");
    }
    return static_cast<Vertex>(x + t) * k + static_cast<Vertex>(y + t);
}

VertexSequence construct_odd_torus_witness(std::size_t k) {
    VertexSequence out;
    for (const auto& p : odd_torus_points(k)) {
        out.push_back(odd_torus_vertex(k, p));
    }
    return out;
}

VertexSequence construct_lex_witness(const Graph& g, const VertexSequence& d, const Graph& h,
                                     const VertexSequence& seq_h) {
    require_dominating(g, d, Mode::closed, "D");
    require_dominating(h, seq_h, Mode::closed, "seqH");
    const std::size_t nh = h.order();
    VertexSequence out;
    VertexSet earlier = g.empty_set();
    for (Vertex x : d) {
        if (!g.neighbors(x).intersects(earlier)) {
            for (Vertex y : seq_h) {
                out.push_back(x * nh + y);
            }
        } else {
            out.push_back(x * nh + seq_h.front());
        }
        earlier.set(x);
    }
    return out;
}

VertexSequence construct_direct_witness(const Graph& g, const VertexSequence& d, const Graph& h,
                                        const VertexSequence& total_seq_h) {
    if (has_isolated_vertex(h)) {
        throw ParameterError("direct witness needs H without isolated vertices");
    }
    require_dominating(g, d, Mode::closed, "D");
    require_dominating(h, total_seq_h, Mode::open, "total sequence of H");
    const std::size_t nh = h.order();
    VertexSequence out;
    VertexSet earlier = g.empty_set();
    for (Vertex x : d) {
        if (!g.neighbors(x).intersects(earlier)) {
            for (Vertex y = 0; y < nh; ++y) {
                out.push_back(x * nh + y);
            }
        } else {
            for (Vertex y : total_seq_h) {
                out.push_back(x * nh + y);
            }
        }
        earlier.set(x);
    }
    return out;
}

VertexSequence construct_strong_witness(const Graph& g, const VertexSequence& seq_g, const Graph& h,
                                        const VertexSequence& seq_h) {
    require_dominating(g, seq_g, Mode::closed, "seqG");
    require_dominating(h, seq_h, Mode::closed, "seqH");
    const std::size_t nh = h.order();
    VertexSequence out;
    out.reserve(seq_g.size() * seq_h.size());
    for (Vertex x : seq_g) {
        for (Vertex y : seq_h) {
            out.push_back(x * nh + y);
        }
    }
    return out;
}

} // namespace gdom
