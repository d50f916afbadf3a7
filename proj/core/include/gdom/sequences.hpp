#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "gdom/graph.hpp"

namespace gdom {

struct SequenceReport {
    bool legal = false;
    bool dominating = false;
    /// Position of the first item that footprints nothing, if any.
    std::optional<std::size_t> first_illegal;
    /// footprinter[u] is the first item whose neighbourhood covers u.
    /// Total when the sequence is dominating.
    std::vector<std::optional<Vertex>> footprinter;
    std::size_t a_value = 0;
    std::size_t length = 0;
};

/// Validates a closed or open neighbourhood sequence.
///
/// Repeats and out-of-range ids raise MalformedSequenceError. Open mode on a
/// graph with an isolated vertex raises DomainError. Checking continues past
/// an illegal item so the footprint map still covers everything the prefix
/// dominates.
SequenceReport check_sequence(const Graph& g, const VertexSequence& s, Mode mode);

/// Number of items with no neighbour among the earlier items.
std::size_t a_value(const Graph& g, const VertexSequence& s);

/// The items counted by a_value, in sequence order.
VertexSequence a_items(const Graph& g, const VertexSequence& s);

/// |boundary(prefix)| for every prefix length 1..|s|.
std::vector<std::size_t> boundary_profile(const Graph& g, const VertexSequence& s);

bool is_legal_dominating(const Graph& g, const VertexSequence& s, Mode mode);

} // namespace gdom
