#pragma once

// Shared domain types for arithmetic-progression-free colorings.
// Colors and positions are 1-based everywhere, including in serialized forms.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace vdw {

using ColorId = int;

// Error taxonomy. The CLI maps each family to a distinct exit code.
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A caller handed a block sequence or base coloring that violates a stated
// precondition (distinct from plain bad parameters so callers can tell them apart).
struct PreconditionError : DomainError {
    using DomainError::DomainError;
};

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& msg, std::int64_t line = 0)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + msg : msg),
          line_number(line) {}
    std::int64_t line_number = 0;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input exceeds a configured cap (verification size, node budget, output size).
struct LimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An r-coloring of {1,...,n}. The empty coloring is legal and acts as the
// identity of concatenation.
class Coloring {
public:
    Coloring() = default;

    Coloring(int color_count, std::vector<ColorId> colors)
        : r_(color_count), colors_(std::move(colors)) {
        if (r_ < 0)
            throw DomainError("coloring: negative color count");
        for (ColorId c : colors_)
            if (c < 1 || c > r_)
                throw DomainError("coloring: entry " + std::to_string(c) +
                                  " outside 1.." + std::to_string(r_));
    }

    int color_count() const { return r_; }
    std::int64_t length() const { return static_cast<std::int64_t>(colors_.size()); }
    bool empty() const { return colors_.empty(); }

    // 1-based position access.
    ColorId at(std::int64_t pos) const { return colors_[static_cast<std::size_t>(pos - 1)]; }

    const std::vector<ColorId>& colors() const { return colors_; }

    // Concatenation; the declared color count becomes the max of the two sides,
    // so the empty coloring (r = 0) is a true identity.
    void append(const Coloring& other) {
        if (other.r_ > r_) r_ = other.r_;
        colors_.insert(colors_.end(), other.colors_.begin(), other.colors_.end());
    }

    Coloring prefix(std::int64_t len) const {
        return Coloring(r_, std::vector<ColorId>(colors_.begin(), colors_.begin() + len));
    }

    friend bool operator==(const Coloring&, const Coloring&) = default;

private:
    int r_ = 0;
    std::vector<ColorId> colors_;
};

// A k-term monochromatic arithmetic progression: the failure certificate of
// verification. Positions start, start+diff, ..., start+(length-1)*diff.
struct APWitness {
    std::int64_t start = 0;
    std::int64_t diff = 0;
    int length = 0;
    ColorId color = 0;

    friend bool operator==(const APWitness&, const APWitness&) = default;
};

// True iff all claimed positions are in range and carry the claimed color.
inline bool witness_checks(const Coloring& coloring, const APWitness& w) {
    if (w.start < 1 || w.diff < 1 || w.length < 2) return false;
    const std::int64_t last = w.start + static_cast<std::int64_t>(w.length - 1) * w.diff;
    if (last > coloring.length()) return false;
    for (int i = 0; i < w.length; ++i)
        if (coloring.at(w.start + static_cast<std::int64_t>(i) * w.diff) != w.color)
            return false;
    return true;
}

}  // namespace vdw
