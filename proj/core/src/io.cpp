#include "gdom/io.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "gdom/errors.hpp"

namespace gdom {

namespace {

std::string_view trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) {
        return {};
    }
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split_ws(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) {
            ++i;
        }
        std::size_t j = i;
        while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') {
            ++j;
        }
        if (j > i) {
            out.push_back(s.substr(i, j - i));
        }
        i = j;
    }
    return out;
}

bool parse_uint(std::string_view tok, std::size_t& out) {
    const auto* first = tok.data();
    const auto* last = tok.data() + tok.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc{} && ptr == last;
}

} // namespace

Graph parse_graph(std::string_view text) {
    std::size_t line_no = 0;
    std::size_t pos = 0;
    bool have_header = false;
    std::size_t n = 0;
    std::size_t m = 0;
    std::vector<Edge> edges;
    std::set<Edge> seen;

    while (pos <= text.size()) {
        const auto nl = text.find('\n', pos);
        const std::string_view raw =
            text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;
        const std::string_view line = trim(raw);
        if (line.empty() || line.front() == '#') {
            continue;
        }
        const auto tok = split_ws(line);
        if (!have_header) {
            if (tok.size() != 2 || !parse_uint(tok[0], n) || !parse_uint(tok[1], m)) {
                throw ParseError(line_no, "malformed header, expected \"n m\"");
            }
            if (m > n * (n == 0 ? 0 : n - 1) / 2) {
                throw ParseError(line_no, "edge count exceeds n(n-1)/2");
            }
            have_header = true;
            continue;
        }
        std::size_t u = 0;
        std::size_t v = 0;
        if (tok.size() != 2 || !parse_uint(tok[0], u) || !parse_uint(tok[1], v)) {
            throw ParseError(line_no, "malformed edge, expected \"u v\"");
        }
        if (edges.size() == m) {
            throw ParseError(line_no, "more edge lines than the header declares");
        }
        if (u == v) {
            throw ParseError(line_no, "self-loop at vertex " + std::to_string(u));
        }
        if (u >= n || v >= n) {
            throw ParseError(line_no, "endpoint out of range (n = " + std::to_string(n) + ")");
        }
        if (u > v) {
            throw ParseError(line_no, "edge endpoints must satisfy u < v");
        }
        if (!seen.emplace(u, v).second) {
            throw ParseError(line_no, "duplicate edge " + std::to_string(u) + " " + std::to_string(v));
        }
        edges.emplace_back(u, v);
    }
    if (!have_header) {
        throw ParseError(line_no, "missing header");
    }
    if (edges.size() != m) {
        throw ParseError(line_no, "expected " + std::to_string(m) + " edges, found " +
                                      std::to_string(edges.size()));
    }
    return Graph::from_edges(n, edges);
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParameterError("cannot open " + path);
    }
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

Graph read_graph_file(const std::string& path) { return parse_graph_any(read_text_file(path)); }

std::string serialize_graph(const Graph& g) {
    std::ostringstream os;
    os << g.order() << ' ' << g.size() << '\n';
    for (const auto& [u, v] : g.edges()) {
        os << u << ' ' << v << '\n';
    }
    return os.str();
}

std::string graph_to_json(const Graph& g) {
    nlohmann::json j;
    j["n"] = g.order();
    j["edges"] = nlohmann::json::array();
    for (const auto& [u, v] : g.edges()) {
        j["edges"].push_back({u, v});
    }
    j["name"] = g.name();
    return j.dump() + "\n";
}

Graph graph_from_json(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(1, std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("n") || !j["n"].is_number_unsigned()) {
        throw ParseError(1, "structured graph needs an unsigned \"n\"");
    }
    const auto n = j["n"].get<std::size_t>();
    std::vector<Edge> edges;
    if (j.contains("edges")) {
        for (const auto& e : j["edges"]) {
            if (!e.is_array() || e.size() != 2 || !e[0].is_number_unsigned() || !e[1].is_number_unsigned()) {
                throw ParseError(1, "each edge must be a pair of unsigned ids");
            }
            edges.emplace_back(e[0].get<std::size_t>(), e[1].get<std::size_t>());
        }
    }
    std::string name = j.value("name", std::string{});
    try {
        return Graph::from_edges(n, edges, std::move(name));
    } catch (const ParameterError& e) {
        throw ParseError(1, e.what());
    }
}

Graph parse_graph_any(std::string_view text) {
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string_view::npos && text[first] == '{') {
        return graph_from_json(text);
    }
    return parse_graph(text);
}

VertexSequence parse_sequence(std::string_view text) {
    VertexSequence out;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto nl = text.find('\n', pos);
        const std::string_view raw =
            text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;
        const std::string_view line = trim(raw);
        if (line.empty() || line.front() == '#') {
            continue;
        }
        for (auto tok : split_ws(line)) {
            std::size_t v = 0;
            if (!parse_uint(tok, v)) {
                throw ParseError(line_no, "not a vertex id: " + std::string(tok));
            }
            out.push_back(v);
        }
    }
    return out;
}

VertexSequence read_sequence_file(const std::string& path) { return parse_sequence(read_text_file(path)); }

std::string serialize_sequence(const VertexSequence& s) {
    std::ostringstream os;
    for (std::size_t i = 0; i < s.size(); ++i) {
        os << (i ? " " : "") << s[i];
    }
    os << '\n';
    return os.str();
}

FamilySpec parse_family(std::string_view text) {
    const auto colon = text.find(':');
    if (colon == std::string_view::npos) {
        throw ParameterError("family spec must look like name:params, got \"" + std::string(text) + "\"");
    }
    const std::string_view name = text.substr(0, colon);
    FamilySpec spec;
    if (name == "path" || name == "P") {
        spec.family = Family::path;
    } else if (name == "cycle" || name == "C") {
        spec.family = Family::cycle;
    } else if (name == "complete" || name == "K") {
        spec.family = Family::complete;
    } else if (name == "star" || name == "S") {
        spec.family = Family::star;
    } else if (name == "caterpillar") {
        spec.family = Family::caterpillar;
    } else if (name == "custom") {
        spec.family = Family::custom;
    } else {
        throw ParameterError("unknown family \"" + std::string(name) + "\"");
    }
    std::string_view rest = text.substr(colon + 1);
    while (!rest.empty()) {
        const auto comma = rest.find(',');
        const std::string_view tok = rest.substr(0, comma);
        std::size_t v = 0;
        if (!parse_uint(tok, v)) {
            throw ParameterError("bad family parameter \"" + std::string(tok) + "\"");
        }
        spec.params.push_back(static_cast<long long>(v));
        rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    }
    return spec;
}

std::string family_label(const FamilySpec& spec) {
    std::string prefix;
    switch (spec.family) {
    case Family::path: prefix = "P"; break;
    case Family::cycle: prefix = "C"; break;
    case Family::complete: prefix = "K"; break;
    case Family::star: prefix = "S"; break;
    case Family::caterpillar: prefix = "cat"; break;
    case Family::custom: prefix = "custom"; break;
    }
    for (std::size_t i = 0; i < spec.params.size(); ++i) {
        prefix += (i == 0 ? "" : "_") + std::to_string(spec.params[i]);
    }
    return prefix;
}

} // namespace gdom
