#include "gdom/scan.hpp"

#include <atomic>
#include <chrono>
#include <sstream>
#include <thread>

#include "gdom/bounds.hpp"
#include "gdom/enumerate.hpp"
#include "gdom/errors.hpp"
#include "gdom/products.hpp"

namespace gdom {

std::string_view to_string(PairStatus s) {
    switch (s) {
    case PairStatus::equality: return "equality";
    case PairStatus::counterexample: return "counterexample";
    case PairStatus::skipped: return "skipped";
    }
    return "?";
}

namespace {

using Clock = std::chrono::steady_clock;

ScanEntry scan_pair(const Graph& g, const Graph& h, const ScanConfig& cfg) {
    ScanEntry e;
    e.left = g.name();
    e.right = h.name();
    const std::size_t order = g.order() * h.order();
    if (order > cfg.max_product_order || order > cfg.solver.max_order) {
        e.skip_reason = "product order " + std::to_string(order) + " over cap";
        return e;
    }
    SolverOptions so = cfg.solver;
    so.threads = 1;
    try {
        const SolveResult rg = grundy(g, Mode::closed, so);
        const SolveResult rh = grundy(h, Mode::closed, so);
        const SolveResult rp = grundy(product(ProductKind::strong, g, h).graph, Mode::closed, so);
        e.gamma_left = rg.value;
        e.gamma_right = rh.value;
        e.gamma_product = rp.value;
        e.witness_left = rg.witness;
        e.witness_right = rh.witness;
        e.witness_product = rp.witness;

        BoundsOptions bo;
        bo.solver = so;
        e.lower = static_cast<std::int64_t>(rg.value * rh.value);
        e.upper = static_cast<std::int64_t>(std::min(g.order() * rh.value, rg.value * h.order()));
        e.upper = std::min(e.upper, strong_simplicial_upper(g, h, rh.value, bo));
        e.upper = std::min(e.upper, strong_simplicial_upper(h, g, rg.value, bo));
    } catch (const ResourceError& err) {
        e.skip_reason = err.what();
        return e;
    }
    const auto gp = static_cast<std::int64_t>(e.gamma_product);
    e.bounds_hold = e.lower <= gp && gp <= e.upper;
    e.status = gp == e.lower ? PairStatus::equality : PairStatus::counterexample;
    return e;
}

} // namespace

ScanReport conjecture_scan(const ScanConfig& config) {
    if (config.max_n == 0) {
        throw ParameterError("scan max_n must be >= 1");
    }
    std::vector<Graph> pool;
    for (std::size_t n = 1; n <= config.max_n; ++n) {
        auto level = enumerate_connected_graphs(n, std::max<std::size_t>(config.max_n, 7));
        pool.insert(pool.end(), level.begin(), level.end());
    }
    std::vector<Graph> fams;
    for (const auto& f : config.families) {
        fams.push_back(make_graph(f));
    }

    std::vector<std::pair<const Graph*, const Graph*>> pairs;
    switch (config.pair_mode) {
    case PairMode::families:
        if (fams.empty()) {
            throw ParameterError("families pair mode needs at least one family");
        }
        for (const auto& g : pool) {
            for (const auto& h : fams) {
                pairs.emplace_back(&g, &h);
            }
        }
        break;
    case PairMode::self:
        for (const auto& g : pool) {
            pairs.emplace_back(&g, &g);
        }
        break;
    case PairMode::all:
        for (std::size_t i = 0; i < pool.size(); ++i) {
            for (std::size_t j = i; j < pool.size(); ++j) {
                pairs.emplace_back(&pool[i], &pool[j]);
            }
        }
        break;
    }

    ScanReport rep;
    rep.entries.resize(pairs.size());
    const auto start = Clock::now();
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < pairs.size(); i = next++) {
            const auto [g, h] = pairs[i];
            const double used = std::chrono::duration<double>(Clock::now() - start).count();
            if (config.budget_seconds > 0 && used > config.budget_seconds) {
                rep.entries[i].left = g->name();
                rep.entries[i].right = h->name();
                rep.entries[i].skip_reason = "budget exhausted";
                continue;
            }
            rep.entries[i] = scan_pair(*g, *h, config);
        }
    };
    std::size_t threads = config.threads ? config.threads : std::max(1U, std::thread::hardware_concurrency());
    threads = std::min(threads, std::max<std::size_t>(pairs.size(), 1));
    std::vector<std::thread> workers;
    for (std::size_t t = 1; t < threads; ++t) {
        workers.emplace_back(work);
    }
    work();
    for (auto& w : workers) {
        w.join();
    }

    for (const auto& e : rep.entries) {
        switch (e.status) {
        case PairStatus::equality: ++rep.equalities; break;
        case PairStatus::counterexample: ++rep.counterexamples; break;
        case PairStatus::skipped: ++rep.skipped; break;
        }
        if (e.status != PairStatus::skipped && !e.bounds_hold) {
            ++rep.bound_violations;
        }
    }
    return rep;
}

namespace {

void put_seq(std::ostream& os, const VertexSequence& s) {
    for (std::size_t i = 0; i < s.size(); ++i) {
        os << (i ? "," : "") << s[i];
    }
}

} // namespace

std::string format_scan_report(const ScanReport& report) {
    std::ostringstream os;
    for (const auto& e : report.entries) {
        os << "pair=" << e.left << "*" << e.right;
        if (e.status == PairStatus::skipped) {
            os << " status=skipped reason=\"" << e.skip_reason << "\"\n";
            continue;
        }
        os << " gL=" << e.gamma_left << " gR=" << e.gamma_right << " gProd=" << e.gamma_product
           << " lower=" << e.lower << " upper=" << e.upper << " bounds=" << (e.bounds_hold ? "ok" : "VIOLATED")
           << " status=" << to_string(e.status) << '\n';
        if (e.status == PairStatus::counterexample || !e.bounds_hold) {
            os << "  witness_left=";
            put_seq(os, e.witness_left);
            os << " witness_right=";
            put_seq(os, e.witness_right);
            os << " witness_product=";
            put_seq(os, e.witness_product);
            os << '\n';
        }
    }
    os << "summary pairs=" << report.entries.size() << " equality=" << report.equalities
       << " counterexample=" << report.counterexamples << " skipped=" << report.skipped
       << " bound_violations=" << report.bound_violations << '\n';
    return os.str();
}

} // namespace gdom
