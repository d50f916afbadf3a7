#include "gdom/solver.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <string>
#include <thread>

#include "gdom/errors.hpp"
#include "mask.hpp"

namespace gdom {

std::size_t default_memo_cap() {
    if (const char* env = std::getenv("GDOM_MEMO_CAP")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) {
            return static_cast<std::size_t>(v);
        }
    }
    return std::size_t{1} << 22;
}

namespace {

using Clock = std::chrono::steady_clock;

std::size_t resolve_cap(const SolverOptions& o) { return o.memo_cap ? o.memo_cap : default_memo_cap(); }

std::size_t resolve_threads(const SolverOptions& o) {
    if (o.threads) {
        return o.threads;
    }
    const unsigned hc = std::thread::hardware_concurrency();
    return hc ? hc : 1;
}

void check_order(const Graph& g, const SolverOptions& o) {
    if (o.max_order > 256) {
        throw ParameterError("solver max_order cannot exceed 256");
    }
    if (g.order() > o.max_order) {
        throw ResourceError("graph order " + std::to_string(g.order()) + " exceeds solver limit " +
                            std::to_string(o.max_order));
    }
}

template <std::size_t W>
std::vector<detail::Mask<W>> neighbourhood_masks(const Graph& g, Mode mode) {
    std::vector<detail::Mask<W>> out;
    out.reserve(g.order());
    for (Vertex v = 0; v < g.order(); ++v) {
        out.push_back(detail::to_mask<W>(neighborhood(g, v, mode)));
    }
    return out;
}

// f(D) = longest legal continuation from dominated set D.
//
// search(D, alpha) returns f(D) exactly when f(D) > alpha, and otherwise
// some upper bound <= alpha. The memo stores (bound, exact) so a bound
// proven under one alpha can be reused under another.
template <std::size_t W>
class Engine {
public:
    using M = detail::Mask<W>;

    Engine(std::vector<M> nb, std::size_t n, std::size_t cap, bool pruning)
        : nb_(std::move(nb)), n_(n), full_(detail::full_mask<W>(n)), pruning_(pruning), memo_(cap) {
        // Neighbourhoods are symmetric, so the moves that can still cover u
        // are exactly nb_[u]; reach_[u] is everything those moves cover.
        reach_.resize(n_);
        for (Vertex u = 0; u < n_; ++u) {
            nb_[u].for_each([&](std::size_t v) { reach_[u] = reach_[u] | nb_[v]; });
        }
    }

    int search(const M& dom, int alpha) {
        ++nodes_;
        if (auto* e = memo_.find(dom)) {
            if (e->exact || e->ub <= alpha) {
                return e->ub;
            }
        }

        // Legal moves, ordered by fewest newly dominated vertices.
        std::vector<std::pair<std::size_t, Vertex>> moves;
        for (Vertex v = 0; v < n_; ++v) {
            const std::size_t fresh = nb_[v].count_outside(dom);
            if (fresh) {
                moves.emplace_back(fresh, v);
            }
        }
        if (moves.empty()) {
            memo_.emplace(dom, {0, true});
            return 0;
        }
        if (pruning_) {
            if (const auto parts = components(dom); parts.size() > 1) {
                return search_parts(dom, parts, alpha);
            }
            const int ub = static_cast<int>(std::min(full_.count_outside(dom), moves.size()));
            if (ub <= alpha) {
                store(dom, ub, false);
                return ub;
            }
        }
        std::sort(moves.begin(), moves.end());

        int best = 0;
        for (const auto& [fresh, v] : moves) {
            (void)fresh;
            const int th = pruning_ ? std::max(alpha, best) - 1 : -1;
            const int r = 1 + search(dom | nb_[v], th);
            best = std::max(best, r);
            if (pruning_ && best >= static_cast<int>(std::min(full_.count_outside(dom), moves.size()))) {
                break; // met the entry bound, cannot do better
            }
        }
        const bool exact = !pruning_ || best > alpha;
        store(dom, best, exact);
        return best;
    }

    /// f(dom) >= t
    bool at_least(const M& dom, int t) {
        if (t <= 0) {
            return true;
        }
        return search(dom, t - 1) >= t;
    }

    /// Smallest-first optimal continuation from dom, whose value is known to be f.
    void reconstruct(M dom, int f, VertexSequence& out) {
        while (f > 0) {
            bool moved = false;
            for (Vertex v = 0; v < n_; ++v) {
                if (!nb_[v].escapes(dom)) {
                    continue;
                }
                const M child = dom | nb_[v];
                if (at_least(child, f - 1)) {
                    out.push_back(v);
                    dom = child;
                    --f;
                    moved = true;
                    break;
                }
            }
            if (!moved) {
                throw Error("internal: witness reconstruction lost the optimum");
            }
        }
    }

    const M& nb(Vertex v) const { return nb_[v]; }
    std::uint64_t nodes() const { return nodes_; }
    std::size_t memo_size() const { return memo_.size(); }
    std::uint64_t evictions() const { return memo_.evictions(); }

private:
    struct Entry {
        int ub;
        bool exact;
    };

    // Undominated vertices split into classes that no single move links;
    // f is the sum over classes.
    std::vector<M> components(const M& dom) const {
        std::vector<M> out;
        M left = full_.minus(dom);
        while (left.any()) {
            M comp;
            comp.set(left.lowest());
            M frontier = comp;
            while (frontier.any()) {
                M grown;
                frontier.for_each([&](std::size_t u) { grown = grown | reach_[u]; });
                frontier = (grown & left).minus(comp);
                comp = comp | frontier;
            }
            left = left.minus(comp);
            out.push_back(comp);
        }
        return out;
    }

    int part_bound(const M& part) const {
        int moves = 0;
        for (Vertex v = 0; v < n_; ++v) {
            moves += nb_[v].intersects(part) ? 1 : 0;
        }
        return std::min(static_cast<int>(part.count()), moves);
    }

    int search_parts(const M& dom, const std::vector<M>& parts, int alpha) {
        std::vector<int> ubs;
        int rest = 0;
        for (const M& p : parts) {
            ubs.push_back(part_bound(p));
            rest += ubs.back();
        }
        if (rest <= alpha) {
            store(dom, rest, false);
            return rest;
        }
        int solved = 0;
        for (std::size_t i = 0; i < parts.size(); ++i) {
            rest -= ubs[i];
            // This part must exceed its share for the total to exceed alpha.
            const int share = alpha - solved - rest;
            const int r = search(full_.minus(parts[i]), share);
            if (r <= share) {
                const int bound = solved + r + rest;
                store(dom, bound, false);
                return bound;
            }
            solved += r;
        }
        store(dom, solved, true);
        return solved;
    }

    void store(const M& dom, int value, bool exact) {
        if (auto* e = memo_.find(dom)) {
            if (e->exact) {
                return;
            }
            if (exact || value < e->ub) {
                *e = {value, exact};
            }
            return;
        }
        memo_.emplace(dom, {value, exact});
    }

    std::vector<M> nb_;
    std::vector<M> reach_;
    std::size_t n_;
    M full_;
    bool pruning_;
    detail::FifoMemo<M, Entry, detail::MaskHash<W>> memo_;
    std::uint64_t nodes_ = 0;
};

template <std::size_t W>
SolveResult solve_with(const Graph& g, Mode mode, const SolverOptions& o) {
    using M = detail::Mask<W>;
    const auto start = Clock::now();
    const std::size_t n = g.order();
    const std::size_t cap = resolve_cap(o);
    const auto nb = neighbourhood_masks<W>(g, mode);
    const std::size_t threads = std::min(resolve_threads(o), std::max<std::size_t>(n, 1));

    SolveResult res;
    if (threads <= 1) {
        Engine<W> eng(nb, n, cap, o.pruning);
        const int f = eng.search(M{}, -1);
        eng.reconstruct(M{}, f, res.witness);
        res.value = static_cast<std::size_t>(f);
        res.stats.nodes = eng.nodes();
        res.stats.memo_entries = eng.memo_size();
        res.stats.evictions = eng.evictions();
    } else {
        // Root branches are shared out dynamically; a common best value
        // tightens every worker's threshold. Value and witness do not
        // depend on the schedule.
        std::vector<Engine<W>> engines;
        engines.reserve(threads);
        for (std::size_t t = 0; t < threads; ++t) {
            engines.emplace_back(nb, n, cap, o.pruning);
        }
        std::vector<Vertex> roots;
        for (Vertex v = 0; v < n; ++v) {
            if (nb[v].any()) {
                roots.push_back(v);
            }
        }
        std::vector<std::size_t> owner(roots.size(), 0);
        std::atomic<std::size_t> next{0};
        std::atomic<int> best{0};
        auto work = [&](std::size_t t) {
            for (std::size_t i = next++; i < roots.size(); i = next++) {
                owner[i] = t;
                const int alpha = o.pruning ? best.load() - 1 : -1;
                const int r = 1 + engines[t].search(nb[roots[i]], alpha);
                int cur = best.load();
                while (r > cur && !best.compare_exchange_weak(cur, r)) {
                }
            }
        };
        std::vector<std::thread> pool;
        for (std::size_t t = 1; t < threads; ++t) {
            pool.emplace_back(work, t);
        }
        work(0);
        for (auto& th : pool) {
            th.join();
        }
        const int f = best.load();
        for (std::size_t i = 0; i < roots.size() && f > 0; ++i) {
            Engine<W>& eng = engines[owner[i]];
            const M child = nb[roots[i]];
            if (eng.at_least(child, f - 1)) {
                res.witness.push_back(roots[i]);
                eng.reconstruct(child, f - 1, res.witness);
                break;
            }
        }
        res.value = static_cast<std::size_t>(f);
        for (const auto& eng : engines) {
            res.stats.nodes += eng.nodes();
            res.stats.memo_entries += eng.memo_size();
            res.stats.evictions += eng.evictions();
        }
    }
    res.stats.elapsed = std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - start);
    return res;
}

} // namespace

SolveResult grundy(const Graph& g, Mode mode, const SolverOptions& options) {
    check_order(g, options);
    if (mode == Mode::open && has_isolated_vertex(g)) {
        throw DomainError("Grundy total domination needs a graph without isolated vertices");
    }
    if (g.order() == 0) {
        return {};
    }
    if (g.order() <= 64) {
        return solve_with<1>(g, mode, options);
    }
    if (g.order() <= 128) {
        return solve_with<2>(g, mode, options);
    }
    return solve_with<4>(g, mode, options);
}

namespace {

struct BruteForce {
    const Graph& g;
    std::vector<VertexSet> nb;
    VertexSequence current;
    VertexSequence best;
    std::uint64_t nodes = 0;

    void run(const VertexSet& covered) {
        ++nodes;
        bool extended = false;
        for (Vertex v = 0; v < g.order(); ++v) {
            if (nb[v].is_subset_of(covered)) {
                continue;
            }
            if (std::find(current.begin(), current.end(), v) != current.end()) {
                continue;
            }
            extended = true;
            current.push_back(v);
            run(covered | nb[v]);
            current.pop_back();
        }
        if (!extended && covered.all() && current.size() > best.size()) {
            best = current;
        }
    }
};

} // namespace

SolveResult grundy_bruteforce(const Graph& g, Mode mode) {
    if (g.order() > 10) {
        throw ResourceError("brute-force oracle supports at most 10 vertices");
    }
    if (mode == Mode::open && has_isolated_vertex(g)) {
        throw DomainError("Grundy total domination needs a graph without isolated vertices");
    }
    const auto start = Clock::now();
    BruteForce bf{g, {}, {}, {}, 0};
    for (Vertex v = 0; v < g.order(); ++v) {
        bf.nb.push_back(neighborhood(g, v, mode));
    }
    bf.run(g.empty_set());
    SolveResult res;
    res.value = bf.best.size();
    res.witness = bf.best;
    res.stats.nodes = bf.nodes;
    res.stats.elapsed = std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - start);
    return res;
}

namespace {

template <std::size_t W>
struct PairKey {
    detail::Mask<W> dom;
    detail::Mask<W> chosen;
    friend bool operator==(const PairKey&, const PairKey&) = default;
};

template <std::size_t W>
struct PairHash {
    std::size_t operator()(const PairKey<W>& k) const noexcept {
        const detail::MaskHash<W> h;
        return h(k.dom) * 31U ^ h(k.chosen);
    }
};

template <std::size_t W>
class WeightedEngine {
public:
    using M = detail::Mask<W>;

    WeightedEngine(const Graph& g, std::size_t first, std::size_t later, std::size_t cap)
        : closed_(neighbourhood_masks<W>(g, Mode::closed)),
          open_(neighbourhood_masks<W>(g, Mode::open)),
          n_(g.order()),
          first_(first),
          later_(later),
          memo_(cap) {}

    std::size_t value(const M& dom, const M& chosen) {
        const PairKey<W> key{dom, chosen};
        if (auto* e = memo_.find(key)) {
            return *e;
        }
        std::size_t best = 0;
        for (Vertex v = 0; v < n_; ++v) {
            if (!closed_[v].escapes(dom)) {
                continue;
            }
            M next = chosen;
            next.set(v);
            best = std::max(best, weight(v, chosen) + value(dom | closed_[v], next));
        }
        memo_.emplace(key, best);
        return best;
    }

    VertexSequence reconstruct() {
        VertexSequence out;
        M dom;
        M chosen;
        std::size_t f = value(dom, chosen);
        while (f > 0) {
            bool moved = false;
            for (Vertex v = 0; v < n_ && !moved; ++v) {
                if (!closed_[v].escapes(dom)) {
                    continue;
                }
                M next = chosen;
                next.set(v);
                const std::size_t w = weight(v, chosen);
                if (w <= f && w + value(dom | closed_[v], next) == f) {
                    out.push_back(v);
                    dom = dom | closed_[v];
                    chosen = next;
                    f -= w;
                    moved = true;
                }
            }
            if (!moved) {
                throw Error("internal: weighted reconstruction lost the optimum");
            }
        }
        return out;
    }

private:
    std::size_t weight(Vertex v, const M& chosen) const {
        return open_[v].intersects(chosen) ? later_ : first_;
    }

    std::vector<M> closed_;
    std::vector<M> open_;
    std::size_t n_;
    std::size_t first_;
    std::size_t later_;
    detail::FifoMemo<PairKey<W>, std::size_t, PairHash<W>> memo_;
};

template <std::size_t W>
WeightedSequenceResult weighted_with(const Graph& g, std::size_t first, std::size_t later,
                                     const SolverOptions& o) {
    WeightedEngine<W> eng(g, first, later, resolve_cap(o));
    WeightedSequenceResult res;
    res.value = eng.value({}, {});
    res.sequence = eng.reconstruct();
    return res;
}

} // namespace

WeightedSequenceResult max_weighted_sequence(const Graph& g, std::size_t first_weight,
                                             std::size_t later_weight, const SolverOptions& options) {
    check_order(g, options);
    if (g.order() == 0) {
        return {};
    }
    if (first_weight == 0 && later_weight == 0) {
        return {};
    }
    if (g.order() <= 64) {
        return weighted_with<1>(g, first_weight, later_weight, options);
    }
    if (g.order() <= 128) {
        return weighted_with<2>(g, first_weight, later_weight, options);
    }
    return weighted_with<4>(g, first_weight, later_weight, options);
}

WeightedSequenceResult lex_grundy(const Graph& g, std::size_t gamma_h, const SolverOptions& options) {
    if (gamma_h == 0) {
        throw ParameterError("gamma_gr(H) is at least 1 for a non-empty H");
    }
    // a(D)(gamma_h - 1) + |D|: first-kind items weigh gamma_h, others 1.
    return max_weighted_sequence(g, gamma_h, 1, options);
}

namespace {

void dominate_rec(const std::vector<VertexSet>& nb, const VertexSet& covered, std::size_t used,
                  std::size_t& best) {
    if (used >= best) {
        return;
    }
    const auto u = (~covered).find_first();
    if (u == VertexSet::npos) {
        best = used;
        return;
    }
    if (used + 1 >= best) {
        return;
    }
    for (auto w = nb[u].find_first(); w != VertexSet::npos; w = nb[u].find_next(w)) {
        dominate_rec(nb, covered | nb[w], used + 1, best);
    }
}

} // namespace

std::size_t domination_number(const Graph& g) {
    if (g.order() > 64) {
        throw ResourceError("domination_number is for graphs of order <= 64");
    }
    std::vector<VertexSet> nb;
    for (Vertex v = 0; v < g.order(); ++v) {
        nb.push_back(neighborhood(g, v, Mode::closed));
    }
    std::size_t best = g.order();
    dominate_rec(nb, g.empty_set(), 0, best);
    return best;
}

} // namespace gdom
