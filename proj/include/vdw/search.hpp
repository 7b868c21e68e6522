#pragma once

// Exhaustive depth-first search for the longest valid r-coloring up to a
// length limit. Plain DFS with incremental pruning; exhaustiveness claims
// stay auditable, so no restarts and no randomized heuristics.

#include <cstdint>
#include <functional>
#include <limits>
#include <optional>

#include "vdw/types.hpp"

namespace vdw {

struct SearchOutcome {
    std::int64_t best_length = 0;
    Coloring best;
    // True iff the full tree up to n_limit was explored within budget AND
    // best_length < n_limit, i.e. no valid coloring of best_length+1 exists.
    bool exhausted = false;
    std::uint64_t nodes_expanded = 0;
};

struct SearchOptions {
    // Counted in expanded nodes: a node is a successful placement of a color
    // at a position (pruned attempts are not nodes). Deterministic.
    std::uint64_t node_budget = std::numeric_limits<std::uint64_t>::max();
    // Called once per improvement: (new best length, nodes so far, seconds).
    std::function<void(std::int64_t, std::uint64_t, double)> on_improve;
};

// Depth-first extension position by position, colors tried in ascending
// order. Symmetry reduction: position 1 is fixed to color 1 and a new color
// may be introduced only as 1 + (max color used so far). Requires r >= 2,
// k >= 3, n_limit >= 1.
SearchOutcome search_max_valid(int r, int k, std::int64_t n_limit,
                               const SearchOptions& options = {});

// A k-term monochromatic progression whose last element is at `position`,
// if one exists; ascending difference, so it equals the brute enumeration
// filtered to progressions ending there. Requires position == length.
std::optional<APWitness> incremental_ktmap_at(const Coloring& coloring,
                                              std::int64_t position, int k);

}  // namespace vdw
