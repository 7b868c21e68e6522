#pragma once

// Decides whether a coloring contains a k-term monochromatic arithmetic
// progression. Two routes: a brute-force reference scan in a fixed
// deterministic order, and a bitmap path that must agree with it.

#include <chrono>
#include <cstdint>
#include <optional>

#include "vdw/types.hpp"

namespace vdw {

struct VerifyReport {
    bool valid = true;
    std::optional<APWitness> witness;
    // brute: candidate (start, diff) pairs examined.
    // fast: (diff, color) strata examined.
    std::uint64_t progressions_scanned = 0;
    std::chrono::duration<double> elapsed{0};
};

// Reference scan: ascending diff, then ascending start; returns the first
// monochromatic progression. diff >= 1 only (constant progressions are not
// progressions of distinct positions). Requires k >= 2.
std::optional<APWitness> find_first_ktmap_brute(const Coloring& coloring, int k);

struct FastOptions {
    std::int64_t n_max = 5'000'000;  // inputs above this are rejected with LimitError
    int chunks = 0;                  // difference-range partitions; 0 = single chunk
    bool parallel = false;           // run chunks on std::async
};

// Same decision as the brute scan; the returned witness is the minimum under
// the brute order (ascending diff, then start), so it coincides with the
// brute witness. Per-color occupancy bitmaps, stratified by difference; a
// difference dies as soon as the word-level intersection goes empty. The
// result is independent of the chunk partitioning.
std::optional<APWitness> find_first_ktmap_fast(const Coloring& coloring, int k,
                                               const FastOptions& options = {});

// Wrapper producing a timed report from either route.
VerifyReport verify(const Coloring& coloring, int k, bool use_brute_oracle = false,
                    const FastOptions& options = {});

// Concatenates the named block tuples and reports whether every k-term
// monochromatic progression in the concatenation has common difference
// divisible by p (full enumeration). Requires a nonempty sequence of
// non-excluded block indices; an excluded index is a PreconditionError.
bool concat_tmap_diffs_divisible(const std::vector<ColorId>& block_sequence, int r, int k);

}  // namespace vdw
