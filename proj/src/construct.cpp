#include "vdw/construct.hpp"

#include <algorithm>
#include <set>

#include "vdw/blocks.hpp"
#include "vdw/primes.hpp"

namespace vdw {

BlockAssignment default_assignment(int r, int k) {
    if (r < 2) throw DomainError("default_assignment: r must be >= 2");
    const auto excluded = excluded_block_indices(r, k);
    BlockAssignment a{r, k, {}};
    for (ColorId i = 1; i <= r; ++i)
        if (!std::binary_search(excluded.begin(), excluded.end(), i))
            a.block_for.push_back(i);
    return a;
}

void validate_assignment(const BlockAssignment& assignment) {
    const int r = assignment.r, k = assignment.k;
    if (r < 2) throw DomainError("assignment: r must be >= 2");
    const int p = largest_prime_leq(k);
    const int expected_domain = r - (r + p - 1) / p;
    if (assignment.base_color_count() != expected_domain)
        throw DomainError("assignment: domain size " +
                          std::to_string(assignment.base_color_count()) + ", expected " +
                          std::to_string(expected_domain) + " for r=" + std::to_string(r) +
                          ", k=" + std::to_string(k));
    const auto excluded = excluded_block_indices(r, k);
    std::set<ColorId> seen;
    for (ColorId b : assignment.block_for) {
        if (b < 1 || b > r)
            throw DomainError("assignment: block index " + std::to_string(b) + " outside 1.." +
                              std::to_string(r));
        if (std::binary_search(excluded.begin(), excluded.end(), b))
            throw DomainError("assignment: block index " + std::to_string(b) + " is excluded");
        if (!seen.insert(b).second)
            throw DomainError("assignment: block index " + std::to_string(b) + " used twice");
    }
}

Coloring blow_up(const Coloring& base, int r, int k, const BlockAssignment& assignment) {
    if (assignment.r != r || assignment.k != k)
        throw DomainError("blow_up: assignment targets (r=" + std::to_string(assignment.r) +
                          ", k=" + std::to_string(assignment.k) + "), not (r=" +
                          std::to_string(r) + ", k=" + std::to_string(k) + ")");
    validate_assignment(assignment);
    if (base.color_count() != assignment.base_color_count())
        throw DomainError("blow_up: base has " + std::to_string(base.color_count()) +
                          " colors, assignment expects " +
                          std::to_string(assignment.base_color_count()));

    const int p = largest_prime_leq(k);
    // Expand each assigned block once, then splice per base position.
    std::vector<std::vector<ColorId>> expanded;
    expanded.reserve(assignment.block_for.size());
    for (ColorId b : assignment.block_for) expanded.push_back(block_tuple(b, r, k).entries);

    std::vector<ColorId> out;
    out.reserve(static_cast<std::size_t>(base.length()) * static_cast<std::size_t>(p));
    for (ColorId c : base.colors()) {
        const auto& block = expanded[static_cast<std::size_t>(c - 1)];
        out.insert(out.end(), block.begin(), block.end());
    }
    return Coloring(r, std::move(out));
}

Coloring blow_up(const Coloring& base, int r, int k) {
    return blow_up(base, r, k, default_assignment(r, k));
}

Coloring construct_chain(int k, int r, const std::optional<Coloring>& base) {
    if (k < 3) throw DomainError("construct_chain: k must be >= 3");
    const int p = largest_prime_leq(k);
    if (r < 2) throw DomainError("construct_chain: r must be >= 2");
    if (r > p)
        throw LimitError("construct_chain: r=" + std::to_string(r) + " exceeds p=" +
                         std::to_string(p) + "; call blow_up directly with an explicit base");

    Coloring current;
    if (base) {
        current = *base;
        if (current.color_count() < 1 || current.color_count() >= r)
            throw DomainError("construct_chain: seed must use between 1 and r-1 colors");
    } else {
        current = Coloring(1, std::vector<ColorId>(static_cast<std::size_t>(k - 1), 1));
    }
    // For every target r_next <= p, ceil(r_next/p) = 1, so each step consumes
    // a base with exactly r_next - 1 colors.
    for (int r_next = current.color_count() + 1; r_next <= r; ++r_next)
        current = blow_up(current, r_next, k);
    return current;
}

}  // namespace vdw
