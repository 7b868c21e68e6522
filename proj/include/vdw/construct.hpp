#pragma once

// The blow-up substitution and the recursive construction chain: every base
// position is replaced by a full length-p block tuple, multiplying the
// length by p and preserving validity.

#include <optional>
#include <vector>

#include "vdw/types.hpp"

namespace vdw {

// Injective map from base colors 1..r' to allowed (non-excluded) block
// indices of the target (r, k), with r' = r - ceil(r/p).
struct BlockAssignment {
    int r = 0;
    int k = 0;
    std::vector<ColorId> block_for;  // block_for[j-1] = block index for base color j

    int base_color_count() const { return static_cast<int>(block_for.size()); }

    friend bool operator==(const BlockAssignment&, const BlockAssignment&) = default;
};

// Maps base color j to the j-th allowed block index in ascending order
// (for r <= p this is j -> j+1). Requires r >= 2.
BlockAssignment default_assignment(int r, int k);

// Validates injectivity, domain size r - ceil(r/p), and image disjoint from
// the excluded indices.
void validate_assignment(const BlockAssignment& assignment);

// Substitutes the assigned block tuple for every base position. Output
// length is exactly p * len(base); a valid base yields a valid output.
Coloring blow_up(const Coloring& base, int r, int k, const BlockAssignment& assignment);
Coloring blow_up(const Coloring& base, int r, int k);  // default assignment

// Repeated blow-up stepping the color count 1 -> 2 -> ... -> r (requires
// 2 <= r <= p; each step's base count is r_next - 1 there). Default seed:
// the monochromatic coloring of length k-1. With the default seed the output
// length is exactly p^(r-1) * (k-1).
Coloring construct_chain(int k, int r, const std::optional<Coloring>& base = std::nullopt);

}  // namespace vdw
