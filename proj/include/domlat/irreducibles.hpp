/** @file irreducibles.hpp
 *  @brief Completely join-/meet-irreducible partitions and their four-type
 *  taxonomies.
 *
 *  A partition is completely join-irreducible iff exactly one transition
 *  rule applies to it, i.e. it has a unique lower cover.  The
 *  join-irreducibles fall into four disjoint shape classes:
 *
 *    A: (k,...,k)                          l parts, k >= 2
 *    B: (k,..,k,k-1,..,k-1)                b parts k, l parts k-1, k >= 2, b >= 1
 *    C: (k,1,...,1)                        d ones, k >= 3, d >= 1
 *    D: (k+1,..,k+1,k,..,k,1,...,1)        b parts k+1, l parts k, d ones,
 *                                          k >= 3, b+l >= 2, l >= 1, d >= 1
 *
 *  Dually, the meet-irreducibles split into:
 *
 *    I:   (t,...,t)                        c parts, t >= 1, c >= 2
 *    II:  (t,...,t,r)                      c parts t, t > r >= 1, c >= 1
 *    III: (a,1,...,1)                      c ones, a >= 2, c >= 2
 *    IV:  (a,t,...,t,r)                    c parts t, a > t > r >= 0, t,c >= 2
 *                                          (r = 0 means no final part)
 *
 *  Conjugation swaps the paired classes (A,I), (B,II), (C,III), (D,IV).
 *  The boundaries above make the classes pairwise disjoint; e.g.
 *  (2,1,...,1) is of type B, not C.
 */

#ifndef DOMLAT_IRREDUCIBLES_HPP
#define DOMLAT_IRREDUCIBLES_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "domlat/partition.hpp"

namespace domlat {

enum class JoinType { A, B, C, D };
enum class MeetType { I, II, III, IV };

std::string to_string(JoinType t);
std::string to_string(MeetType t);

/// Conjugation-dual class of a class.
MeetType dual_type(JoinType t);
JoinType dual_type(MeetType t);

/// Template parameters; only the fields of the matched template are
/// meaningful (join side: k, b, ell, d; meet side: a, t, c, r).
struct IrreducibleParams {
    int k = 0, b = 0, ell = 0, d = 0;
    int a = 0, t = 0, c = 0, r = 0;
};

enum class IrreducibleKind { join, meet };

struct IrreducibleInfo {
    Partition partition;
    IrreducibleKind kind = IrreducibleKind::join;
    int type = 0; // 0..3, meaning A..D for join and I..IV for meet
    IrreducibleParams params;
    Partition unique_cover; // lower cover for join kind, upper cover for meet kind

    JoinType join_type() const { return static_cast<JoinType>(type); }
    MeetType meet_type() const { return static_cast<MeetType>(type); }
    std::string type_name() const;
};

/// Rebuild the partition from a matched template (used to cross-check
/// classification and to generate irreducibles without enumerating Part(n)).
Partition join_template(JoinType t, const IrreducibleParams& p);
Partition meet_template(MeetType t, const IrreducibleParams& p);

/// The unique matching template, or nullopt when p is not irreducible of
/// that kind.  At most one template can match.
std::optional<std::pair<JoinType, IrreducibleParams>> classify_join_type(const Partition& p);
std::optional<std::pair<MeetType, IrreducibleParams>> classify_meet_type(const Partition& p);

/// All completely join-/meet-irreducible partitions of n in descending
/// lexicographic order, generated directly from the parameter templates
/// (no lattice construction; fine up to n = 60 and beyond).
std::vector<IrreducibleInfo> join_irreducibles(int n);
std::vector<IrreducibleInfo> meet_irreducibles(int n);

} // namespace domlat

#endif
