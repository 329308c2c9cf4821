#pragma once

#include <vector>

#include "maxwist/graph.hpp"
#include "maxwist/solution.hpp"

namespace maxwist {

struct OracleResult {
    std::vector<Edge> best_tree; // u < v, sorted; lexicographically smallest optimum
    Weight opt_internal_weight = 0;
    long long trees_evaluated = 0;
};

// Exhaustive branch-and-bound over edge subsets (include/exclude) with
// union-find cycle detection, connectivity pruning, and a weight upper bound
// from forced leaves. Exact; refuses graphs above the cap.
OracleResult optimal_internal_spanning_tree(const VertexWeightedGraph& g, int cap = 16);

// Oracle result wrapped as a solution; guarantee is the realized ratio.
SpanningTreeSolution solve_exact(const VertexWeightedGraph& g, int cap = 16);

} // namespace maxwist
