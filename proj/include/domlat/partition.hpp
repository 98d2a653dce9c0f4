/** @file partition.hpp
 *  @brief Integer partitions in canonical form, conjugation and the
 *  dominance order.
 *
 *  A partition of n is stored as its non-increasing sequence of positive
 *  parts; trailing zeros are never kept, so the empty sequence is the
 *  unique partition of 0.  Two partitions of the same integer are compared
 *  by dominance: a <= b iff every prefix sum of a is at most the
 *  corresponding prefix sum of b.  Partition conjugation (transposing the
 *  Ferrers diagram) is an involution and reverses dominance.
 *
 *  All values are immutable after construction and all operations are
 *  pure, so they can be shared freely across threads.
 */

#ifndef DOMLAT_PARTITION_HPP
#define DOMLAT_PARTITION_HPP

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace domlat {

class Partition {
public:
    /// The empty partition of 0.
    Partition() = default;

    /// Canonicalizes and validates: strips trailing zeros, rejects
    /// sequences that are not non-increasing or contain an interior zero.
    /// Throws std::invalid_argument on bad input.
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int n() const { return n_; }
    bool empty() const { return parts_.empty(); }

    /// Value of the first part; 0 for the empty partition.
    int height() const { return parts_.empty() ? 0 : parts_.front(); }
    /// Number of stored (positive) parts.
    int length() const { return static_cast<int>(parts_.size()); }

    /// 1-based access; positions beyond length() read as 0.
    int part(int i) const {
        return (i >= 1 && i <= length()) ? parts_[static_cast<size_t>(i) - 1] : 0;
    }

    bool operator==(const Partition& other) const = default;
    /// Lexicographic on the parts sequence.  The canonical display order
    /// used throughout is *descending* lexicographic, i.e. sort with
    /// std::greater<Partition>.
    std::strong_ordering operator<=>(const Partition& other) const {
        return parts_ <=> other.parts_;
    }

private:
    std::vector<int> parts_;
    int n_ = 0;
};

/// Canonicalizing constructor as a free function.
Partition make_partition(std::span<const int> parts);
Partition make_partition(std::initializer_list<int> parts);

/// Conjugate (dual) partition: part i of the result counts the parts of p
/// that are >= i.  Involutive: conjugate(conjugate(p)) == p.
Partition conjugate(const Partition& p);

/// First `upto` prefix sums of p, absent parts counted as 0.
std::vector<long long> prefix_sums(const Partition& p, int upto);

/// Dominance comparison.  Requires a.n() == b.n(); throws
/// std::invalid_argument otherwise (partitions of different integers are
/// incomparable by contract).
bool dominance_leq(const Partition& a, const Partition& b);

inline int height(const Partition& p) { return p.height(); }
inline int length(const Partition& p) { return p.length(); }

/// Canonical text rendering: parts joined by commas without spaces,
/// e.g. "4,1,1,1"; the empty partition renders as "0".
std::string to_string(const Partition& p);

/// Inverse of to_string; throws std::invalid_argument on malformed input.
Partition parse_partition(std::string_view text);

} // namespace domlat

#endif
