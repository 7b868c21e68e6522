#include "vdw/blocks.hpp"

#include "vdw/primes.hpp"

namespace vdw {

BlockTuple block_tuple(ColorId i, int r, int k) {
    if (r < 1)
        throw DomainError("block_tuple: r must be >= 1");
    if (i < 1 || i > r)
        throw DomainError("block_tuple: start color " + std::to_string(i) +
                          " outside 1.." + std::to_string(r));
    const int p = largest_prime_leq(k);
    BlockTuple t{i, r, k, p, {}};
    t.entries.reserve(static_cast<std::size_t>(p));
    for (int j = 1; j <= p; ++j)
        t.entries.push_back((i - 1 + j - 1) % r + 1);
    return t;
}

std::vector<ColorId> excluded_block_indices(int r, int k) {
    if (r < 2)
        throw DomainError("excluded_block_indices: r must be >= 2");
    const int p = largest_prime_leq(k);
    const int ceil_r_p = (r + p - 1) / p;
    std::vector<ColorId> out;
    for (int m = 0; m < ceil_r_p; ++m) {
        const int idx = 1 + p * m;
        if (idx <= r) out.push_back(idx);
    }
    return out;
}

Coloring concat_block_tuples(const std::vector<ColorId>& sequence, int r, int k) {
    const int p = largest_prime_leq(k);
    std::vector<ColorId> colors;
    colors.reserve(sequence.size() * static_cast<std::size_t>(p));
    for (ColorId i : sequence) {
        BlockTuple t = block_tuple(i, r, k);
        colors.insert(colors.end(), t.entries.begin(), t.entries.end());
    }
    return Coloring(r, std::move(colors));
}

}  // namespace vdw
