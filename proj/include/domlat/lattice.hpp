/** @file lattice.hpp
 *  @brief The lattice of partitions of n under dominance: enumeration,
 *  covering relation, meets and joins.
 *
 *  The covering relation is generated by two local transition rules on the
 *  Ferrers diagram: a brick may fall from a cliff (a_j - a_{j+1} >= 2), or
 *  a brick may slip across a slippery step (a run a_j - 1 = a_{j+1} = ... =
 *  a_{j+l-1} = a_{j+l} + 1 with l >= 2).  The partitions reachable by one
 *  such move are exactly the lower covers.
 *
 *  Meets are computed by taking pointwise minima of prefix sums (the
 *  minimum of two concave sequences is concave, so the differences form a
 *  partition again); joins go through conjugation.
 */

#ifndef DOMLAT_LATTICE_HPP
#define DOMLAT_LATTICE_HPP

#include <cstdint>
#include <functional>
#include <set>
#include <vector>

#include "domlat/partition.hpp"

namespace domlat {

inline constexpr int kDefaultEnumCap = 60;
inline constexpr int kDefaultLatticeCap = 15;

/// Number of partitions of n via the pentagonal-number recurrence.
std::uint64_t partition_count(int n);

/// Visits every partition of n in descending lexicographic order without
/// materializing the list.
void for_each_partition(int n, const std::function<void(const Partition&)>& visit);

/// All partitions of n in descending lexicographic order.
/// Throws std::invalid_argument when n exceeds the cap or is negative.
std::vector<Partition> enumerate_partitions(int n, int cap = kDefaultEnumCap);

/// Lower covers of p in the dominance order (transition rules applied at
/// every cliff and every slippery step).  Ascending-lex order.
std::vector<Partition> lower_covers(const Partition& p);

/// Upper covers, via conjugation of the lower covers of the conjugate.
std::vector<Partition> upper_covers(const Partition& p);

/// Greatest lower bound / least upper bound.  Both require a.n() == b.n().
Partition meet(const Partition& a, const Partition& b);
Partition join(const Partition& a, const Partition& b);

/// Explicit cover-adjacency structure for one value of n.  Only built for
/// small n (default cap 15); irreducibles and arrows never need it.
struct PartitionLattice {
    int n = 0;
    std::vector<Partition> elements;                    // descending lex
    std::vector<std::vector<int>> lower_cover_adjacency; // element index -> indices covered by it
    std::vector<std::vector<int>> upper_cover_adjacency; // inverse map

    static PartitionLattice build(int n, int cap = kDefaultLatticeCap);

    /// Index of p in elements; throws std::invalid_argument if absent.
    int index_of(const Partition& p) const;
};

} // namespace domlat

#endif
