#include "vdw/search.hpp"

#include <chrono>
#include <vector>

namespace vdw {

namespace {

// Pruning kernel on the raw color array: does placing c at 1-based position
// pos (already written) complete a k-term monochromatic progression ending
// there? Scans differences ascending; returns the first.
inline std::int64_t first_completing_diff(const std::vector<ColorId>& c, std::int64_t pos,
                                          int k) {
    const ColorId col = c[static_cast<std::size_t>(pos - 1)];
    const std::int64_t max_d = (pos - 1) / (k - 1);
    for (std::int64_t d = 1; d <= max_d; ++d) {
        bool mono = true;
        for (int j = 1; j < k; ++j) {
            if (c[static_cast<std::size_t>(pos - 1 - j * d)] != col) {
                mono = false;
                break;
            }
        }
        if (mono) return d;
    }
    return 0;
}

}  // namespace

std::optional<APWitness> incremental_ktmap_at(const Coloring& coloring, std::int64_t position,
                                              int k) {
    if (k < 2) throw DomainError("incremental_ktmap_at: k must be >= 2");
    if (position != coloring.length())
        throw PreconditionError("incremental_ktmap_at: position must equal the length");
    if (position < k) return std::nullopt;
    const std::int64_t d = first_completing_diff(coloring.colors(), position, k);
    if (d == 0) return std::nullopt;
    return APWitness{position - static_cast<std::int64_t>(k - 1) * d, d, k,
                     coloring.at(position)};
}

SearchOutcome search_max_valid(int r, int k, std::int64_t n_limit,
                               const SearchOptions& options) {
    if (r < 2) throw DomainError("search_max_valid: r must be >= 2");
    if (k < 3) throw DomainError("search_max_valid: k must be >= 3");
    if (n_limit < 1) throw DomainError("search_max_valid: n_limit must be >= 1");

    SearchOutcome outcome;
    const auto t0 = std::chrono::steady_clock::now();

    std::vector<ColorId> colors;
    colors.reserve(static_cast<std::size_t>(n_limit));
    std::vector<ColorId> max_used;  // max color used among positions 1..i
    max_used.reserve(static_cast<std::size_t>(n_limit));
    // Next color to try at position len+1; 0 means "fresh position".
    std::vector<ColorId> next_try(static_cast<std::size_t>(n_limit) + 1, 1);

    bool budget_hit = false;
    std::int64_t len = 0;

    auto record_improvement = [&](std::int64_t new_len) {
        outcome.best_length = new_len;
        outcome.best = Coloring(r, colors);
        if (options.on_improve) {
            const double secs =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            options.on_improve(new_len, outcome.nodes_expanded, secs);
        }
    };

    // Iterative DFS. At each step, try to extend position len+1 starting from
    // next_try[len]; on failure backtrack.
    while (true) {
        if (len < n_limit) {
            const std::int64_t pos = len + 1;
            const ColorId limit =
                std::min<ColorId>(r, (len == 0 ? 0 : max_used[static_cast<std::size_t>(len - 1)]) + 1);
            ColorId c = next_try[static_cast<std::size_t>(len)];
            bool extended = false;
            for (; c <= limit; ++c) {
                colors.push_back(c);
                if (first_completing_diff(colors, pos, k) == 0) {
                    ++outcome.nodes_expanded;
                    next_try[static_cast<std::size_t>(len)] = c + 1;
                    max_used.push_back(std::max<ColorId>(c, len == 0 ? 0 : max_used.back()));
                    ++len;
                    next_try[static_cast<std::size_t>(len)] = 1;
                    extended = true;
                    if (len > outcome.best_length) record_improvement(len);
                    if (outcome.nodes_expanded >= options.node_budget) budget_hit = true;
                    break;
                }
                colors.pop_back();
            }
            if (budget_hit) break;
            if (extended) continue;
        }
        // Exhausted colors here (or at n_limit): backtrack.
        if (len == 0) break;
        colors.pop_back();
        max_used.pop_back();
        --len;
    }

    outcome.exhausted = !budget_hit && outcome.best_length < n_limit;
    return outcome;
}

}  // namespace vdw
