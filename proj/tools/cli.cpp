#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "gdom/bounds.hpp"
#include "gdom/constructions.hpp"
#include "gdom/errors.hpp"
#include "gdom/formulas.hpp"
#include "gdom/io.hpp"
#include "gdom/isoperimetric.hpp"
#include "gdom/products.hpp"
#include "gdom/scan.hpp"
#include "gdom/sequences.hpp"
#include "gdom/solver.hpp"

namespace gdom::cli {

namespace {

Mode parse_mode(const std::string& s) {
    if (s == "closed") return Mode::closed;
    if (s == "open") return Mode::open;
    throw ParameterError("mode must be closed or open, got \"" + s + "\"");
}

std::string join(const VertexSequence& s, const char* sep = " ") {
    std::ostringstream os;
    for (std::size_t i = 0; i < s.size(); ++i) {
        os << (i ? sep : "") << s[i];
    }
    return os.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        throw ParameterError("cannot write " + path);
    }
    f << text;
}

long long parse_int(const std::string& s) {
    std::size_t pos = 0;
    long long v = 0;
    try {
        v = std::stoll(s, &pos);
    } catch (const std::exception&) {
        throw ParameterError("not an integer: \"" + s + "\"");
    }
    if (pos != s.size()) {
        throw ParameterError("not an integer: \"" + s + "\"");
    }
    return v;
}

std::vector<std::size_t> parse_size_list(const std::string& s) {
    std::vector<std::size_t> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        const long long v = parse_int(tok);
        if (v < 0) {
            throw ParameterError("negative list entry " + tok);
        }
        out.push_back(static_cast<std::size_t>(v));
    }
    return out;
}

struct Common {
    std::size_t threads = 0;
    std::size_t max_order = 64;
    std::size_t memo_cap = 0;
    bool no_pruning = false;

    void attach(CLI::App* app) {
        app->add_option("--threads", threads, "Worker threads (0 = all available)");
        app->add_option("--max-order", max_order, "Solver order limit (<= 256)");
        app->add_option("--memo-cap", memo_cap, "Memo entry cap (0 = GDOM_MEMO_CAP or default)");
        app->add_flag("--no-pruning", no_pruning, "Disable branch-and-bound bounds");
    }
    SolverOptions solver() const {
        SolverOptions o;
        o.threads = threads;
        o.max_order = max_order;
        o.memo_cap = memo_cap;
        o.pruning = !no_pruning;
        return o;
    }
};

void report_check(std::ostream& out, const Graph& g, const VertexSequence& s, Mode mode) {
    const SequenceReport r = check_sequence(g, s, mode);
    out << "legal=" << (r.legal ? "true" : "false") << " dominating=" << (r.dominating ? "true" : "false")
        << " length=" << r.length << " a_value=" << r.a_value << '\n';
    if (r.first_illegal) {
        out << "first_illegal=" << *r.first_illegal << '\n';
    }
    out << "footprints=";
    for (Vertex v = 0; v < g.order(); ++v) {
        out << (v ? " " : "") << v << ':';
        if (r.footprinter[v]) {
            out << *r.footprinter[v];
        } else {
            out << '-';
        }
    }
    out << '\n';
}

struct Construction {
    Graph host;
    VertexSequence seq;
    Mode mode = Mode::closed;
};

Construction build_construction(const std::string& id, const std::vector<std::string>& params,
                                const SolverOptions& so) {
    auto need = [&](std::size_t n) {
        if (params.size() != n) {
            throw ParameterError("construct " + id + " takes " + std::to_string(n) + " parameter(s)");
        }
    };
    Construction c;
    if (id == "odd_torus") {
        need(1);
        const long long k = parse_int(params[0]);
        if (k < 3) {
            throw ParameterError("odd_torus needs odd k >= 3");
        }
        c.seq = construct_odd_torus_witness(static_cast<std::size_t>(k));
        const Graph ck = cycle_graph(static_cast<std::size_t>(k));
        c.host = product(ProductKind::cartesian, ck, ck).graph;
        return c;
    }
    if (id == "complete_grid") {
        need(2);
        const long long n = parse_int(params[0]);
        const long long m = parse_int(params[1]);
        if (n < 3 || m < 3) {
            throw ParameterError("complete_grid needs n, m >= 3");
        }
        c.seq = construct_complete_grid_witness(static_cast<std::size_t>(n), static_cast<std::size_t>(m));
        c.host = product(ProductKind::cartesian, complete_graph(static_cast<std::size_t>(n)),
                         complete_graph(static_cast<std::size_t>(m)))
                     .graph;
        return c;
    }
    if (id == "cartesian" || id == "lex" || id == "direct" || id == "strong") {
        need(2);
        const Graph g = make_graph(parse_family(params[0]));
        const Graph h = make_graph(parse_family(params[1]));
        const ProductKind kind = parse_product_kind(id);
        c.host = product(kind, g, h).graph;
        const VertexSequence sg = grundy(g, Mode::closed, so).witness;
        const VertexSequence sh = grundy(h, Mode::closed, so).witness;
        switch (kind) {
        case ProductKind::cartesian:
            c.seq = construct_cartesian_witness(g, h, sg);
            break;
        case ProductKind::lexicographic:
            c.seq = construct_lex_witness(g, lex_grundy(g, sh.size(), so).sequence, h, sh);
            break;
        case ProductKind::direct: {
            if (has_isolated_vertex(h)) {
                throw DomainError("direct construction needs H without isolated vertices");
            }
            const VertexSequence th = grundy(h, Mode::open, so).witness;
            const DirectLine line = direct_sequence_bound(g, h.order(), th.size(), so);
            c.seq = construct_direct_witness(g, line.sequence, h, th);
            break;
        }
        case ProductKind::strong:
            c.seq = construct_strong_witness(g, sg, h, sh);
            break;
        }
        return c;
    }
    throw ParameterError("unknown construction \"" + id +
                         "\" (odd_torus, complete_grid, cartesian, lex, direct, strong)");
}

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Grundy domination toolkit", "gdom"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "Emit a family graph");
    std::string gen_family;
    bool gen_json = false;
    gen->add_option("family", gen_family, "e.g. path:4, cycle:5, caterpillar:2,1,1")->required();
    gen->add_flag("--json", gen_json, "Structured output");

    // product
    auto* prod = app.add_subcommand("product", "Build a product of two graph files");
    std::string prod_kind;
    std::string prod_g;
    std::string prod_h;
    bool prod_json = false;
    prod->add_option("--kind", prod_kind, "cartesian|strong|direct|lex")->required();
    prod->add_option("fileG", prod_g)->required();
    prod->add_option("fileH", prod_h)->required();
    prod->add_flag("--json", prod_json, "Structured output");

    // grundy
    auto* gr = app.add_subcommand("grundy", "Exact Grundy (total) domination number");
    std::string gr_mode = "closed";
    std::string gr_file;
    bool gr_witness = false;
    Common gr_common;
    gr->add_option("--mode", gr_mode, "closed|open");
    gr->add_flag("--witness", gr_witness, "Print an optimal sequence");
    gr->add_option("graph", gr_file)->required();
    gr_common.attach(gr);

    // check-seq
    auto* cs = app.add_subcommand("check-seq", "Validate a vertex sequence");
    std::string cs_mode = "closed";
    std::string cs_graph;
    std::string cs_seq;
    cs->add_option("--mode", cs_mode, "closed|open");
    cs->add_option("graph", cs_graph)->required();
    cs->add_option("sequence", cs_seq)->required();

    // bounds
    auto* bd = app.add_subcommand("bounds", "Named bounds for a product");
    std::string bd_kind;
    std::string bd_g;
    std::string bd_h;
    bool bd_exact = false;
    Common bd_common;
    bd->add_option("--kind", bd_kind, "cartesian|strong|direct|lex")->required();
    bd->add_option("fileG", bd_g)->required();
    bd->add_option("fileH", bd_h)->required();
    bd->add_flag("--exact", bd_exact, "Also solve the product exactly");
    bd_common.attach(bd);

    // formula
    auto* fm = app.add_subcommand("formula", "Closed-form catalog value");
    std::string fm_id;
    std::vector<std::string> fm_params;
    bool fm_list = false;
    fm->add_flag("--list", fm_list, "List catalog entries");
    fm->add_option("id", fm_id);
    fm->add_option("params", fm_params);

    // construct
    auto* ct = app.add_subcommand("construct", "Build a witness sequence");
    std::string ct_id;
    std::vector<std::string> ct_params;
    std::string ct_emit_seq;
    std::string ct_emit_graph;
    Common ct_common;
    ct->add_option("id", ct_id, "odd_torus|complete_grid|cartesian|lex|direct|strong")->required();
    ct->add_option("params", ct_params);
    ct->add_option("--emit-seq", ct_emit_seq, "Write the sequence to a file");
    ct->add_option("--emit-graph", ct_emit_graph, "Write the host graph to a file");
    ct_common.attach(ct);

    // scan
    auto* sc = app.add_subcommand("scan", "Strong-product conjecture scan");
    std::size_t sc_max_n = 4;
    std::vector<std::string> sc_families;
    std::string sc_pairs;
    double sc_budget = 0.0;
    std::size_t sc_max_product = 36;
    Common sc_common;
    sc->add_option("--max-n", sc_max_n, "Largest enumerated order")->required();
    sc->add_option("--families", sc_families, "Family specs paired with every enumerated graph")->delimiter(';');
    sc->add_option("--pairs", sc_pairs, "families|self|all");
    sc->add_option("--budget", sc_budget, "Wall-clock budget in seconds (0 = none)");
    sc->add_option("--max-product-order", sc_max_product, "Skip larger products");
    sc_common.attach(sc);

    // iso-check
    auto* iso = app.add_subcommand("iso-check", "Isoperimetric sanity check");
    std::string iso_kind;
    std::string iso_factors;
    std::size_t iso_r = 1;
    std::uint64_t iso_trials = 500;
    std::uint64_t iso_seed = 1;
    bool iso_exhaustive = false;
    iso->add_option("--kind", iso_kind, "even-torus|grid")->required();
    iso->add_option("--factors", iso_factors, "Comma-separated k_i")->required();
    iso->add_option("--r", iso_r, "Ball radius");
    iso->add_option("--trials", iso_trials, "Random subsets");
    iso->add_option("--seed", iso_seed, "RNG seed");
    iso->add_flag("--exhaustive", iso_exhaustive, "Enumerate every subset of ball size");

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return 0;
    } catch (const CLI::CallForAllHelp& e) {
        app.exit(e, out, err);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }

    if (gen->parsed()) {
        const Graph g = make_graph(parse_family(gen_family));
        out << (gen_json ? graph_to_json(g) : serialize_graph(g));
    } else if (prod->parsed()) {
        const ProductKind kind = parse_product_kind(prod_kind);
        const Graph g = read_graph_file(prod_g);
        const Graph h = read_graph_file(prod_h);
        const ProductDescriptor p = product(kind, g, h);
        if (prod_json) {
            out << graph_to_json(p.graph);
        } else {
            out << "# kind=" << to_string(kind) << " nG=" << p.nG << " nH=" << p.nH << '\n'
                << serialize_graph(p.graph);
        }
    } else if (gr->parsed()) {
        const Mode mode = parse_mode(gr_mode);
        const Graph g = read_graph_file(gr_file);
        const SolveResult r = grundy(g, mode, gr_common.solver());
        out << "value=" << r.value << '\n';
        if (gr_witness) {
            out << "witness=" << join(r.witness) << '\n';
        }
        out << "# nodes=" << r.stats.nodes << " memo=" << r.stats.memo_entries
            << " evictions=" << r.stats.evictions << " elapsed_us=" << r.stats.elapsed.count() << '\n';
    } else if (cs->parsed()) {
        const Mode mode = parse_mode(cs_mode);
        const Graph g = read_graph_file(cs_graph);
        const VertexSequence s = read_sequence_file(cs_seq);
        report_check(out, g, s, mode);
    } else if (bd->parsed()) {
        const ProductKind kind = parse_product_kind(bd_kind);
        const Graph g = read_graph_file(bd_g);
        const Graph h = read_graph_file(bd_h);
        BoundsOptions bo;
        bo.solver = bd_common.solver();
        const BoundsReport rep = product_bounds(kind, g, h, bo);
        for (const auto& e : rep.lower) {
            out << "lower " << e.id << '=' << e.value << '\n';
        }
        for (const auto& e : rep.upper) {
            out << "upper " << e.id << '=' << e.value << '\n';
        }
        if (rep.exact) {
            out << "exact " << rep.exact->id << '=' << rep.exact->value << '\n';
        }
        out << "best_lower=" << rep.best_lower();
        if (const auto ub = rep.best_upper()) {
            out << " best_upper=" << *ub;
        }
        out << " consistent=" << (rep.consistent() ? "true" : "false") << '\n';
        if (bd_exact) {
            const auto v = grundy(product(kind, g, h).graph, Mode::closed, bo.solver).value;
            out << "solved=" << v << " bracketed=" << (rep.brackets(static_cast<std::int64_t>(v)) ? "true" : "false")
                << '\n';
        }
    } else if (fm->parsed()) {
        if (fm_list) {
            for (const auto& e : formula_catalog()) {
                out << e.id << '(' << e.signature << ") " << to_string(e.exactness) << " [" << e.conditions << "]\n";
            }
        } else {
            if (fm_id.empty()) {
                throw ParameterError("formula needs an id (or --list)");
            }
            std::vector<std::int64_t> p;
            for (const auto& s : fm_params) {
                p.push_back(parse_int(s));
            }
            const FormulaValue v = formula_value(fm_id, p);
            out << "value=" << v.value << " exactness=" << to_string(v.exactness) << '\n';
        }
    } else if (ct->parsed()) {
        const Construction c = build_construction(ct_id, ct_params, ct_common.solver());
        out << "construct=" << ct_id << " order=" << c.host.order() << " length=" << c.seq.size() << '\n';
        out << "sequence=" << join(c.seq) << '\n';
        const SequenceReport r = check_sequence(c.host, c.seq, c.mode);
        out << "legal=" << (r.legal ? "true" : "false") << " dominating=" << (r.dominating ? "true" : "false")
            << '\n';
        if (!ct_emit_seq.empty()) {
            write_file(ct_emit_seq, serialize_sequence(c.seq));
        }
        if (!ct_emit_graph.empty()) {
            write_file(ct_emit_graph, serialize_graph(c.host));
        }
    } else if (sc->parsed()) {
        ScanConfig cfg;
        cfg.max_n = sc_max_n;
        for (const auto& f : sc_families) {
            cfg.families.push_back(parse_family(f));
        }
        if (sc_pairs.empty()) {
            cfg.pair_mode = cfg.families.empty() ? PairMode::self : PairMode::families;
        } else if (sc_pairs == "families") {
            cfg.pair_mode = PairMode::families;
        } else if (sc_pairs == "self") {
            cfg.pair_mode = PairMode::self;
        } else if (sc_pairs == "all") {
            cfg.pair_mode = PairMode::all;
        } else {
            throw ParameterError("--pairs must be families, self or all");
        }
        cfg.budget_seconds = sc_budget;
        cfg.max_product_order = sc_max_product;
        cfg.threads = sc_common.threads;
        cfg.solver = sc_common.solver();
        out << format_scan_report(conjecture_scan(cfg));
    } else if (iso->parsed()) {
        IsoConfig cfg;
        if (iso_kind == "even-torus") {
            cfg.kind = IsoKind::even_torus;
        } else if (iso_kind == "grid") {
            cfg.kind = IsoKind::grid;
        } else {
            throw ParameterError("--kind must be even-torus or grid");
        }
        cfg.factors = parse_size_list(iso_factors);
        cfg.radius = iso_r;
        cfg.trials = iso_trials;
        cfg.seed = iso_seed;
        cfg.exhaustive = iso_exhaustive;
        const IsoReport r = isoperimetric_check(cfg);
        out << "order=" << r.order << " center=" << r.center << " ball_size=" << r.ball_size
            << " ball_boundary=" << r.ball_boundary << " trivial=" << (r.trivial ? "true" : "false") << '\n'
            << "checked=" << r.checked << " violations=" << r.violations << " min_boundary=" << r.min_boundary
            << '\n';
    }
    return 0;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    try {
        return dispatch(args, out, err);
    } catch (const ResourceError& e) {
        err << "resource limit: " << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

} // namespace gdom::cli
