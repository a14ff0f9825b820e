#pragma once

#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <vector>

#include "eqkl/bigint.hpp"

namespace eqkl {

/// Raised when a requested part sequence is not weakly decreasing.
struct NotWeaklyDecreasing : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Integer partition: weakly decreasing positive parts. The empty partition
/// is the unique partition of 0. Immutable after construction.
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts);

    /// Normalizing constructor: strips zero entries, then validates that the
    /// remaining parts are weakly decreasing. Throws NotWeaklyDecreasing.
    static Partition from_parts(const std::vector<int>& raw);

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return size_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    /// Part at 0-based row index, 0 beyond the last row.
    int part(int row) const {
        return row >= 0 && row < length() ? parts_[static_cast<std::size_t>(row)] : 0;
    }

    bool contains(const Partition& inner) const;
    Partition conjugate() const;

    bool operator==(const Partition&) const = default;

private:
    std::vector<int> parts_;
    int size_ = 0;
};

/// Strict weak order used everywhere terms are stored or printed: larger
/// partition size first, then lexicographically larger parts first, so a
/// degree-n expansion lists (n) first and (1^n) last.
struct PartitionOrder {
    bool operator()(const Partition& a, const Partition& b) const {
        if (a.size() != b.size()) return a.size() > b.size();
        return a.parts() > b.parts();
    }
};

/// make_partition per the public surface; alias of Partition::from_parts.
Partition make_partition(const std::vector<int>& raw);

/// Assembles (head, 2^twos, 1^ones) literally, without re-sorting. Returns
/// nullopt when an exponent is negative or the literal sequence is not
/// weakly decreasing; callers treat that as a vanishing term.
std::optional<Partition> compact_partition(int head, int twos, int ones);

/// True iff inner ⊆ outer and no two cells of outer/inner share a column.
bool is_horizontal_strip(const Partition& outer, const Partition& inner);

/// True iff inner ⊆ outer and no two cells of outer/inner share a row.
bool is_vertical_strip(const Partition& outer, const Partition& inner);

/// Skew diagram outer/inner with inner ⊆ outer enforced at construction.
class SkewShape {
public:
    SkewShape() = default;
    SkewShape(Partition outer, Partition inner);

    const Partition& outer() const { return outer_; }
    const Partition& inner() const { return inner_; }
    int size() const { return outer_.size() - inner_.size(); }

    bool operator==(const SkewShape&) const = default;

private:
    Partition outer_;
    Partition inner_;
};

/// Number of standard Young tableaux of straight shape, by the hook length
/// formula n!/∏hooks.
BigInt syt_count(const Partition& shape);

/// Number of standard Young tableaux of skew shape, via the Schur expansion
/// of the shape: Σ_ν c^{outer}_{inner,ν} · syt_count(ν).
BigInt skew_syt_count(const SkewShape& shape);

} // namespace eqkl
