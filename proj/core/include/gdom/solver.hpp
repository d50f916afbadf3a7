#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>

#include "gdom/graph.hpp"

namespace gdom {

struct SolverOptions {
    /// Graphs above this order are rejected with ResourceError. At most 256.
    std::size_t max_order = 64;
    /// Memo entry cap; the oldest inserted entries are evicted first.
    /// Zero means "use GDOM_MEMO_CAP from the environment, else 4M".
    std::size_t memo_cap = 0;
    /// Worker threads for root-level branches; 0 means hardware concurrency.
    std::size_t threads = 1;
    /// Admissible upper bounds for branch-and-bound; disabling them leaves
    /// only the exact memoised recursion.
    bool pruning = true;
};

struct SolveStats {
    std::uint64_t nodes = 0;
    std::uint64_t memo_entries = 0;
    std::uint64_t evictions = 0;
    std::chrono::microseconds elapsed{0};
};

struct SolveResult {
    std::size_t value = 0;
    VertexSequence witness;
    SolveStats stats;
};

/// Grundy domination number (closed) or Grundy total domination number
/// (open), with the lexicographically smallest optimal sequence as witness.
///
/// The search state is the dominated set alone: whether v is a legal next
/// move depends only on whether its neighbourhood is already covered.
SolveResult grundy(const Graph& g, Mode mode, const SolverOptions& options = {});

/// Exhaustive enumeration of all legal sequences without memoisation.
/// Independent oracle for grundy(); n <= 10.
SolveResult grundy_bruteforce(const Graph& g, Mode mode);

struct WeightedSequenceResult {
    std::size_t value = 0;
    VertexSequence sequence;
};

/// Maximises sum of weights over dominating sequences D of g, where an item
/// with no earlier neighbour in D weighs first_weight and every other item
/// weighs later_weight. The memo key is the pair (dominated, chosen).
WeightedSequenceResult max_weighted_sequence(const Graph& g, std::size_t first_weight,
                                             std::size_t later_weight,
                                             const SolverOptions& options = {});

/// max over dominating sequences D of a(D)(gamma_h - 1) + |D|, the Grundy
/// domination number of g o H for any H with gamma_gr(H) = gamma_h.
WeightedSequenceResult lex_grundy(const Graph& g, std::size_t gamma_h,
                                  const SolverOptions& options = {});

/// Exact domination number, for small graphs.
std::size_t domination_number(const Graph& g);

std::size_t default_memo_cap();

} // namespace gdom
