/** @file theorems.hpp
 *  @brief Closed-form enumeration of every arrow of the standard context,
 *  with provenance, straight from the parameter families.
 *
 *  Double arrows come from three families (duplicates across the families
 *  are merged; the overlap is exactly the pairs ((n),(n-1,1)) and
 *  ((2,1,..,1),(1,..,1))):
 *
 *   AB: for each width w in [1, n-1] write n = w*k + b with 0 <= b < w;
 *       then (k+1,..,k+1,k,..,k)  <->  (n-w,1,...,1)   (b parts k+1, w ones)
 *   C:  for each k in [2, n] write n = t*(k-1) + r with 0 <= r <= k-2;
 *       then (k,1,...,1)  <->  (k-1,...,k-1,r)         (t parts k-1)
 *   CD: for every type-D object g with parameters (k,b,l,d) and every
 *       t in [2, min(k-1,d+1)], with a = b + (b+l)*(k-t) + t - 1 and
 *       n - a = c*t + r (0 <= r < t):
 *       g  <->  (a,t,...,t,r)                          (c parts t)
 *
 *  Down-arrows that are not up-arrows come from two families:
 *
 *   Cdown1:     for k >= 4, d = n-k >= 1, t in [2, k-2] with 2t <= d+1 and
 *               n - (k-1) = c*t + r:
 *               (k,1,...,1)  <-  (k-1,t,...,t,r)       (c parts t)
 *   ABCDdownIV: for b,d >= 0, k >= d+3, l >= 1, b+l >= 3 with
 *               n = b(k+1) + l*k + d, t in [d+2, k-1] and
 *               a = b + (b+l)*(k-t) + t - 1:
 *               (k+1,..,k+1,k,..,k,1,..,1)  <-  (a,t,...,t,d+1)
 *                                                      (b+l-1 parts t)
 *               (d = 0 gives the type-A/B sources, d >= 1 the type-D ones)
 *
 *  Up-arrows that are not down-arrows are the conjugates of the down-only
 *  family (conjugation swaps the two single-arrow relations); the Dual*
 *  tags record which family a conjugated pair came from, and
 *  single_up_arrows_direct() evaluates the dual closed forms literally so
 *  the two routes can be checked against each other.
 */

#ifndef DOMLAT_THEOREMS_HPP
#define DOMLAT_THEOREMS_HPP

#include <string>
#include <utility>
#include <vector>

#include "domlat/context.hpp"
#include "domlat/irreducibles.hpp"
#include "domlat/partition.hpp"

namespace domlat {

enum class ArrowKind { dbl, down_only, up_only };

enum class TheoremTag { AB, C, CD, Cdown1, ABCDdownIV, DualCdown1, DualABCDdownIV };

std::string to_string(ArrowKind k);   // "<->", "<-", "->"
std::string to_string(TheoremTag t);

struct PredictedArrow {
    Partition g;
    Partition m;
    ArrowKind kind = ArrowKind::dbl;
    std::vector<TheoremTag> sources;                  // sorted, duplicates merged
    std::vector<std::pair<std::string, int>> params;  // named ints of the first source

    bool operator==(const PredictedArrow&) const = default;
};

/// All double arrows of the standard context of partitions of n.
std::vector<PredictedArrow> double_arrows(int n);

/// All (g,m) with a down-arrow that is not an up-arrow.
std::vector<PredictedArrow> single_down_arrows(int n);

/// All (g,m) with an up-arrow that is not a down-arrow, produced by
/// conjugating single_down_arrows(n).
std::vector<PredictedArrow> single_up_arrows(int n);

/// Same set evaluated from the dual closed forms instead of by
/// conjugation; used to cross-check transcription of the formulas.
std::vector<PredictedArrow> single_up_arrows_direct(int n);

/// Assembly into the index space of standard_context(n):
/// down = doubles + down_only, up = doubles + up_only.
ArrowRelations predicted_arrows(int n);
ArrowRelations predicted_arrows(const std::vector<IrreducibleInfo>& ji,
                                const std::vector<IrreducibleInfo>& mi);

/// The sixteen (object type, arrow kind, attribute type) patterns that
/// occur, in report order.
struct ArrowPattern {
    JoinType jt;
    ArrowKind kind;
    MeetType mt;
    bool operator==(const ArrowPattern&) const = default;
};
const std::vector<ArrowPattern>& arrow_patterns();

struct FirstOccurrenceRow {
    ArrowPattern pattern;
    int first_n = 0;  // 0 when the pattern never occurred up to max_n
    Partition g, m;   // witness, descending-lex-first on g then m
};

/// For each pattern, the least n <= max_n where it occurs and a witness.
/// Requires max_n >= 13 (all sixteen patterns occur by then).
std::vector<FirstOccurrenceRow> first_occurrence_report(int max_n);

} // namespace domlat

#endif
