/** @file closure.hpp
 *  @brief One-generated arrow-closed subcontexts via directed reachability.
 *
 *  Build the directed graph on the disjoint union of objects and
 *  attributes with an edge g -> m for every up-arrow g -> m and an edge
 *  m -> g for every down-arrow g <- m.  The smallest arrow-closed
 *  subcontext containing a generator is its forward-reachability closure,
 *  split back into the object part H and the attribute part N: every
 *  up-arrow leaving H must land in N and every down-arrow leaving N must
 *  land in H.
 */

#ifndef DOMLAT_CLOSURE_HPP
#define DOMLAT_CLOSURE_HPP

#include <vector>

#include "domlat/context.hpp"

namespace domlat {

/// Nodes 0..|G|-1 are objects, |G|..|G|+|M|-1 are attributes.
struct ArrowGraph {
    int num_objects = 0;
    int num_attributes = 0;
    std::vector<std::vector<int>> adjacency;

    int node_count() const { return num_objects + num_attributes; }
    int edge_count() const;
    int attribute_node(int m) const { return num_objects + m; }
};

ArrowGraph arrow_graph(const FormalContext& ctx, const ArrowRelations& arrows);

struct Generator {
    enum class Side { object, attribute } side = Side::object;
    int index = 0;
};

struct Subcontext {
    std::vector<int> object_subset;    // H, ascending indices
    std::vector<int> attribute_subset; // N, ascending indices
    Generator generator;

    bool is_1x1() const { return object_subset.size() == 1 && attribute_subset.size() == 1; }
};

/// Minimal arrow-closed subcontext containing the generator.
Subcontext one_generated_closure(const FormalContext& ctx, const ArrowRelations& arrows,
                                 Generator generator);

/// Closures generated from every object, deduplicated by (H, N), ordered
/// by (H, N) lexicographically on the index lists.
std::vector<Subcontext> all_one_generated_closures(const FormalContext& ctx,
                                                   const ArrowRelations& arrows);
/// Convenience: standard context of n with cover-based arrows.
std::vector<Subcontext> all_one_generated_closures(int n);

/// Number of distinct one-generated closures of format 1x1; equals 2n-4.
/// Requires n >= 3.
int count_1x1_closures(int n);

/// Checks the defining property against the full arrow relations.
bool is_arrow_closed(const FormalContext& ctx, const ArrowRelations& arrows,
                     const Subcontext& sub);

} // namespace domlat

#endif
