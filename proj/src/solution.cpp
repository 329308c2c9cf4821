#include "maxwist/solution.hpp"

#include <algorithm>
#include <string>

#include "maxwist/bigalloc.hpp"
#include "maxwist/errors.hpp"

namespace maxwist {

Weight internal_weight_of_tree(const VertexWeightedGraph& g, const std::vector<Edge>& edges) {
    const int n = g.vertex_count();
    if (static_cast<int>(edges.size()) != n - 1)
        raise(ErrorCode::InvariantViolation, "tree has " + std::to_string(edges.size()) +
                                                 " edges, expected " + std::to_string(n - 1));
    std::vector<int, BigAllocator<int>> deg(n, 0);
    for (const auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n || u == v)
            raise(ErrorCode::IndexOutOfRange,
                  "tree edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
        ++deg[u];
        ++deg[v];
    }
    Weight internal = 0;
    for (int v = 0; v < n; ++v)
        if (deg[v] >= 2)
            internal += g.weight(v);
    return internal;
}

SpanningTreeSolution make_solution(const VertexWeightedGraph& g, std::vector<Edge> tree_edges,
                                   Rational guarantee, std::string tag,
                                   Weight bound_total_weight) {
    for (auto& [u, v] : tree_edges)
        if (u > v)
            std::swap(u, v);
    if (!std::is_sorted(tree_edges.begin(), tree_edges.end()))
        std::sort(tree_edges.begin(), tree_edges.end());
    SpanningTreeSolution sol;
    sol.internal_weight = internal_weight_of_tree(g, tree_edges);
    sol.tree_edges = std::move(tree_edges);
    sol.total_weight = g.total_weight();
    sol.bound_total_weight = bound_total_weight;
    sol.guarantee = guarantee;
    sol.algorithm_tag = std::move(tag);
    return sol;
}

Rational cubic_guarantee(int n) {
    // 3/4 - 3/n = (3n - 12) / (4n)
    if (n <= 4)
        return {0, 1};
    return make_rational(3LL * n - 12, 4LL * n);
}

Rational clawfree_guarantee(int n) {
    // 3/5 - 3/(5n) = (3n - 3) / (5n)
    if (n <= 1)
        return {0, 1};
    return make_rational(3LL * n - 3, 5LL * n);
}

} // namespace maxwist
