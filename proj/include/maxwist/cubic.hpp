#pragma once

#include <vector>

#include "maxwist/dfs.hpp"
#include "maxwist/graph.hpp"
#include "maxwist/oracle.hpp"
#include "maxwist/solution.hpp"

namespace maxwist {

// Vertex minimizing the closed neighborhood weight w(N[v]); ties go to the
// smaller index. On a cubic graph w(N[r]) <= 4 w(V) / n.
Vertex select_root_cubic(const VertexWeightedGraph& g);

// Greedy ratio DFS from the selected root.
DfsTree greedy_cubic_tree(const VertexWeightedGraph& g);

// Internal weight at least (3/4 - 3/n) w(V); asserted before returning
// (skipped when w(V) = 0, where the ratio is vacuous).
SpanningTreeSolution solve_cubic(const VertexWeightedGraph& g);

// Solves exactly when n <= 3/epsilon, otherwise greedily; 0 < epsilon < 3/4.
// Either way the result's internal weight is >= (3/4 - epsilon) * OPT.
SpanningTreeSolution approx_cubic(const VertexWeightedGraph& g, const Rational& epsilon,
                                  int oracle_cap = 16);

// Per-leaf audit of the two alternating ascend-paths behind the 3/4 bound.
struct PathLemmaLeafCheck {
    Vertex leaf = -1;
    std::vector<Vertex> b_path; // picked up from the deeper backward edge; sums to >= 2 w(leaf)
    std::vector<Vertex> c_path; // from the higher backward edge; sums to >= w(leaf)
    Weight b_sum = 0;
    Weight c_sum = 0;
};

struct PathLemmaReport {
    int leaves_checked = 0;
    std::vector<PathLemmaLeafCheck> leaves;
};

// Rebuilds both paths for every leaf of a greedy ratio DFS tree on a cubic
// graph and verifies the path sums, the degree-2 claims, and that the
// collected sets are disjoint apart from the root's unique child. Raises
// InvariantViolation naming the offending leaf otherwise.
PathLemmaReport check_path_lemma(const VertexWeightedGraph& g, const DfsTree& t);

} // namespace maxwist
