#pragma once

// Block-tuple algebra: the length-p substitution units of the blow-up
// construction and the index set that must be left out of concatenations.

#include <vector>

#include "vdw/types.hpp"

namespace vdw {

struct BlockTuple {
    ColorId start_color = 0;
    int r = 0;
    int k = 0;
    int p = 0;  // tuple length, the largest prime <= k
    std::vector<ColorId> entries;

    friend bool operator==(const BlockTuple&, const BlockTuple&) = default;
};

// The p-tuple starting at color i and cycling i, i+1, ..., r, 1, 2, ...
// Requires 1 <= i <= r and k >= 2.
BlockTuple block_tuple(ColorId i, int r, int k);

// Block indices {1 + p*m : m = 0 .. ceil(r/p)-1} within 1..r: the tuples that
// must be omitted so every color misses at least one in-block residue class.
// Sorted ascending. Requires r >= 2, k >= 2.
std::vector<ColorId> excluded_block_indices(int r, int k);

// Concatenation of the named tuples, in order, as a single coloring.
Coloring concat_block_tuples(const std::vector<ColorId>& sequence, int r, int k);

}  // namespace vdw
