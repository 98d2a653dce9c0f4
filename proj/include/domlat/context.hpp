/** @file context.hpp
 *  @brief Formal contexts, the standard context of the dominance lattice,
 *  and the arrow relations computed two independent ways.
 *
 *  The standard context of the lattice of partitions of n has the
 *  join-irreducibles as objects, the meet-irreducibles as attributes, and
 *  dominance as incidence.  For g not incident with m,
 *
 *    g <- m  (down-arrow)  iff the intent of g is maximal among object
 *                          intents not containing m,
 *    g -> m  (up-arrow)    iff the extent of m is maximal among attribute
 *                          extents not containing g,
 *
 *  and the double arrow is their intersection.  arrows_bruteforce()
 *  evaluates these defining quantifiers on packed boolean rows;
 *  arrows_via_covers() instead uses the cover-based criterion valid in any
 *  doubly founded lattice:
 *
 *    g <- m  iff  g !<= m  and  lower_cover(g) <= m
 *    g -> m  iff  g !<= m  and  g <= upper_cover(m)
 *
 *  which needs no quantifier over the whole context and scales to n = 60.
 */

#ifndef DOMLAT_CONTEXT_HPP
#define DOMLAT_CONTEXT_HPP

#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include "domlat/irreducibles.hpp"
#include "domlat/partition.hpp"

namespace domlat {

/// Fixed-width packed boolean matrix with word-parallel subset tests.
class BitRows {
public:
    BitRows() = default;
    BitRows(int rows, int cols)
        : rows_(rows), cols_(cols), words_per_row_((cols + 63) / 64),
          data_(static_cast<size_t>(rows) * static_cast<size_t>(words_per_row_), 0) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    void set(int r, int c) {
        data_[word_index(r, c)] |= std::uint64_t{1} << (c & 63);
    }
    bool get(int r, int c) const {
        return (data_[word_index(r, c)] >> (c & 63)) & 1;
    }

    /// Row r is a subset of row s.
    bool row_subset(int r, int s) const {
        const std::uint64_t* a = row_ptr(r);
        const std::uint64_t* b = row_ptr(s);
        for (int w = 0; w < words_per_row_; ++w) {
            if (a[w] & ~b[w]) {
                return false;
            }
        }
        return true;
    }
    bool row_equal(int r, int s) const {
        const std::uint64_t* a = row_ptr(r);
        const std::uint64_t* b = row_ptr(s);
        for (int w = 0; w < words_per_row_; ++w) {
            if (a[w] != b[w]) {
                return false;
            }
        }
        return true;
    }

    BitRows transposed() const;

private:
    size_t word_index(int r, int c) const {
        return static_cast<size_t>(r) * static_cast<size_t>(words_per_row_) +
               static_cast<size_t>(c >> 6);
    }
    const std::uint64_t* row_ptr(int r) const {
        return data_.data() + static_cast<size_t>(r) * static_cast<size_t>(words_per_row_);
    }

    int rows_ = 0;
    int cols_ = 0;
    int words_per_row_ = 0;
    std::vector<std::uint64_t> data_;
};

struct FormalContext {
    std::vector<Partition> objects;    // descending lex
    std::vector<Partition> attributes; // descending lex
    BitRows incidence;                 // indexed (object, attribute)

    bool incident(int g, int m) const { return incidence.get(g, m); }
    int object_index(const Partition& g) const;
    int attribute_index(const Partition& m) const;
};

/// Index pairs (object, attribute); double is always down-and-up.
struct ArrowRelations {
    std::set<std::pair<int, int>> down;
    std::set<std::pair<int, int>> up;
    std::set<std::pair<int, int>> dbl;

    bool operator==(const ArrowRelations&) const = default;
};

/// (join_irreducibles(n), meet_irreducibles(n), dominance).  Requires n >= 2.
FormalContext standard_context(int n);
/// Same, reusing already-computed irreducibles.
FormalContext standard_context(int n, const std::vector<IrreducibleInfo>& ji,
                               const std::vector<IrreducibleInfo>& mi);

/// Row / column slices of the incidence matrix.
std::vector<int> object_intent(const FormalContext& ctx, int g);
std::vector<int> attribute_extent(const FormalContext& ctx, int m);

/// True iff all rows are pairwise distinct and all columns are pairwise
/// distinct.
bool check_clarified_reduced(const FormalContext& ctx);

/// Arrow relations straight from the definition (intent/extent maximality),
/// O(|G|^2 |M| / 64).  The context must be clarified.
ArrowRelations arrows_bruteforce(const FormalContext& ctx);

/// Arrow relations from the unique covers of the irreducibles (no
/// quantifier over the context).  Index space matches standard_context(n).
ArrowRelations arrows_via_covers(int n);
ArrowRelations arrows_via_covers(const std::vector<IrreducibleInfo>& ji,
                                 const std::vector<IrreducibleInfo>& mi);

} // namespace domlat

#endif
