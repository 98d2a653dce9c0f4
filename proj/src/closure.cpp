#include "domlat/closure.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace domlat {

int ArrowGraph::edge_count() const {
    int total = 0;
    for (const auto& out : adjacency) {
        total += static_cast<int>(out.size());
    }
    return total;
}

ArrowGraph arrow_graph(const FormalContext& ctx, const ArrowRelations& arrows) {
    ArrowGraph graph;
    graph.num_objects = static_cast<int>(ctx.objects.size());
    graph.num_attributes = static_cast<int>(ctx.attributes.size());
    graph.adjacency.assign(static_cast<size_t>(graph.node_count()), {});
    for (const auto& [g, m] : arrows.up) {
        graph.adjacency[static_cast<size_t>(g)].push_back(graph.attribute_node(m));
    }
    for (const auto& [g, m] : arrows.down) {
        graph.adjacency[static_cast<size_t>(graph.attribute_node(m))].push_back(g);
    }
    for (auto& out : graph.adjacency) {
        std::sort(out.begin(), out.end());
    }
    return graph;
}

namespace {

Subcontext reach_from(const ArrowGraph& graph, Generator generator) {
    int start = generator.side == Generator::Side::object
                    ? generator.index
                    : graph.attribute_node(generator.index);
    if (generator.index < 0 || start >= graph.node_count() ||
        (generator.side == Generator::Side::object && generator.index >= graph.num_objects)) {
        throw std::invalid_argument("one_generated_closure: unknown generator");
    }
    std::vector<bool> seen(static_cast<size_t>(graph.node_count()), false);
    std::vector<int> stack{start};
    seen[static_cast<size_t>(start)] = true;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : graph.adjacency[static_cast<size_t>(v)]) {
            if (!seen[static_cast<size_t>(w)]) {
                seen[static_cast<size_t>(w)] = true;
                stack.push_back(w);
            }
        }
    }
    Subcontext sub;
    sub.generator = generator;
    for (int v = 0; v < graph.num_objects; ++v) {
        if (seen[static_cast<size_t>(v)]) {
            sub.object_subset.push_back(v);
        }
    }
    for (int m = 0; m < graph.num_attributes; ++m) {
        if (seen[static_cast<size_t>(graph.attribute_node(m))]) {
            sub.attribute_subset.push_back(m);
        }
    }
    return sub;
}

} // namespace

Subcontext one_generated_closure(const FormalContext& ctx, const ArrowRelations& arrows,
                                 Generator generator) {
    return reach_from(arrow_graph(ctx, arrows), generator);
}

std::vector<Subcontext> all_one_generated_closures(const FormalContext& ctx,
                                                   const ArrowRelations& arrows) {
    ArrowGraph graph = arrow_graph(ctx, arrows);
    std::vector<Subcontext> out;
    std::set<std::pair<std::vector<int>, std::vector<int>>> seen;
    for (int g = 0; g < static_cast<int>(ctx.objects.size()); ++g) {
        Subcontext sub = reach_from(graph, {Generator::Side::object, g});
        if (seen.emplace(sub.object_subset, sub.attribute_subset).second) {
            out.push_back(std::move(sub));
        }
    }
    std::sort(out.begin(), out.end(), [](const Subcontext& x, const Subcontext& y) {
        if (x.object_subset != y.object_subset) {
            return x.object_subset < y.object_subset;
        }
        return x.attribute_subset < y.attribute_subset;
    });
    return out;
}

std::vector<Subcontext> all_one_generated_closures(int n) {
    auto ji = join_irreducibles(n);
    auto mi = meet_irreducibles(n);
    FormalContext ctx = standard_context(n, ji, mi);
    return all_one_generated_closures(ctx, arrows_via_covers(ji, mi));
}

int count_1x1_closures(int n) {
    if (n < 3) {
        throw std::invalid_argument("count_1x1_closures: n must be >= 3");
    }
    int count = 0;
    for (const Subcontext& sub : all_one_generated_closures(n)) {
        if (sub.is_1x1()) {
            ++count;
        }
    }
    return count;
}

bool is_arrow_closed(const FormalContext& ctx, const ArrowRelations& arrows,
                     const Subcontext& sub) {
    std::vector<bool> in_h(ctx.objects.size(), false);
    std::vector<bool> in_n(ctx.attributes.size(), false);
    for (int g : sub.object_subset) {
        in_h[static_cast<size_t>(g)] = true;
    }
    for (int m : sub.attribute_subset) {
        in_n[static_cast<size_t>(m)] = true;
    }
    for (const auto& [g, m] : arrows.up) {
        if (in_h[static_cast<size_t>(g)] && !in_n[static_cast<size_t>(m)]) {
            return false;
        }
    }
    for (const auto& [g, m] : arrows.down) {
        if (in_n[static_cast<size_t>(m)] && !in_h[static_cast<size_t>(g)]) {
            return false;
        }
    }
    return true;
}

} // namespace domlat
