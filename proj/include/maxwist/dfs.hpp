#pragma once

#include <span>
#include <vector>

#include "maxwist/graph.hpp"

namespace maxwist {

enum class BranchCriterion {
    // Next vertex maximizes w(x)/u(x), where u(x) counts x's unvisited
    // neighbors at decision time; u(x) = 0 ranks above everything.
    RatioWeightOverUnvisited,
    // Next vertex maximizes w(x).
    MaxWeight,
};

// DFS tree with discovery order and the non-tree ("backward") edges.
// In a DFS tree of a connected undirected graph every non-tree edge joins a
// vertex to one of its ancestors; this is asserted after every run.
struct DfsTree {
    Vertex root = 0;
    std::vector<Vertex> parent;   // -1 at root
    std::vector<int> disc;        // discovery index, root gets 0
    std::vector<Vertex> order;    // disc -> vertex
    std::vector<Edge> backward_edges; // (lower, upper); upper is the ancestor

    // children in visit order, CSR
    std::vector<int> child_start;
    std::vector<Vertex> child_flat;
    std::vector<int> tin, tout;   // Euler intervals for ancestor tests

    std::span<const Vertex> children(Vertex v) const {
        return {child_flat.data() + child_start[v], child_flat.data() + child_start[v + 1]};
    }
    int child_count(Vertex v) const { return child_start[v + 1] - child_start[v]; }
    // The root does not count as a leaf even when it has a single child.
    bool is_leaf(Vertex v) const { return v != root && child_count(v) == 0; }
    int tree_degree(Vertex v) const { return child_count(v) + (v == root ? 0 : 1); }
    // True iff u lies on the tree path from the root to v (u == v included).
    bool is_ancestor(Vertex u, Vertex v) const {
        return tin[u] <= tin[v] && tout[v] <= tout[u];
    }
    // Tree edges as (u, v) with u < v, sorted.
    std::vector<Edge> tree_edges() const;
};

DfsTree run_greedy_dfs(const VertexWeightedGraph& g, Vertex root, BranchCriterion criterion);

// Same, with an alternative weight vector (e.g. degree-1 weights zeroed).
DfsTree run_greedy_dfs(const VertexWeightedGraph& g, Vertex root, BranchCriterion criterion,
                       std::span<const Weight> weights);

// Reconstructs u(x) "while processing probe": the number of neighbors of x
// that were still unvisited right after probe was discovered.
int unvisited_count_at(const DfsTree& t, const VertexWeightedGraph& g, Vertex x, Vertex probe);

} // namespace maxwist
