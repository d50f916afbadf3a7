#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "gdom/graph.hpp"
#include "gdom/solver.hpp"

namespace gdom {

enum class PairMode {
    /// every enumerated graph against every family graph
    families,
    /// every enumerated graph against itself
    self,
    /// every unordered pair of enumerated graphs
    all,
};

struct ScanConfig {
    std::size_t max_n = 4;
    std::vector<FamilySpec> families;
    PairMode pair_mode = PairMode::self;
    /// Wall-clock budget in seconds; pairs not started in time are skipped.
    /// Zero disables the budget.
    double budget_seconds = 0.0;
    /// Products above this order are skipped.
    std::size_t max_product_order = 36;
    std::size_t threads = 1;
    SolverOptions solver;
};

enum class PairStatus { equality, counterexample, skipped };

struct ScanEntry {
    std::string left;
    std::string right;
    std::size_t gamma_left = 0;
    std::size_t gamma_right = 0;
    std::size_t gamma_product = 0;
    std::int64_t lower = 0;
    std::int64_t upper = 0;
    bool bounds_hold = true;
    PairStatus status = PairStatus::skipped;
    std::string skip_reason;
    VertexSequence witness_left;
    VertexSequence witness_right;
    VertexSequence witness_product;
};

struct ScanReport {
    std::vector<ScanEntry> entries;
    std::size_t equalities = 0;
    std::size_t counterexamples = 0;
    std::size_t skipped = 0;
    std::size_t bound_violations = 0;
};

/// For each pair computes gamma(G), gamma(H), gamma(G [x] H), checks the
/// product lower bound and the min-layer and simplicial upper bounds, and
/// classifies the pair. Entries are ordered by pair index regardless of
/// scheduling.
ScanReport conjecture_scan(const ScanConfig& config);

std::string_view to_string(PairStatus s);

/// One line per entry plus a summary line.
std::string format_scan_report(const ScanReport& report);

} // namespace gdom
