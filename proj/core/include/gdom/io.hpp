#pragma once

#include <istream>
#include <string>
#include <string_view>

#include "gdom/graph.hpp"

namespace gdom {

// Graph text format: a header "n m" followed by m lines "u v" with
// 0 <= u < v < n. Blank lines and lines starting with '#' are ignored.

Graph parse_graph(std::string_view text);
Graph read_graph_file(const std::string& path);

/// Canonical text: header, then edges in lexicographic order.
std::string serialize_graph(const Graph& g);

/// Structured variant: {"n": .., "edges": [[u, v], ...], "name": ".."}.
std::string graph_to_json(const Graph& g);
Graph graph_from_json(std::string_view text);

/// Accepts either the text format or the structured variant.
Graph parse_graph_any(std::string_view text);

/// Sequence text format: one line of space-separated vertex ids.
VertexSequence parse_sequence(std::string_view text);
VertexSequence read_sequence_file(const std::string& path);
std::string serialize_sequence(const VertexSequence& s);

/// "path:4", "cycle:5", "complete:3", "star:4", "caterpillar:2,1,1".
FamilySpec parse_family(std::string_view text);
std::string family_label(const FamilySpec& spec);

std::string read_text_file(const std::string& path);

} // namespace gdom
