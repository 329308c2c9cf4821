#pragma once

#include <string>
#include <vector>

#include "maxwist/graph.hpp"
#include "maxwist/rational.hpp"

namespace maxwist {

// A spanning tree plus the weight accounting that goes with it. The internal
// weight sums w(v) over vertices of tree degree >= 2, always with the graph's
// original weights. bound_total_weight is the total the guarantee fraction
// applies to; it differs from total_weight only when degree-1 vertices were
// zeroed for a claw-free run.
struct SpanningTreeSolution {
    std::vector<Edge> tree_edges; // normalized u < v, sorted
    Weight internal_weight = 0;
    Weight total_weight = 0;
    Weight bound_total_weight = 0;
    Rational guarantee{0, 1};
    std::string algorithm_tag;
};

// Internal weight of the tree given by `edges` (validated as n-1 distinct
// in-range pairs; degrees derived from scratch).
Weight internal_weight_of_tree(const VertexWeightedGraph& g, const std::vector<Edge>& edges);

SpanningTreeSolution make_solution(const VertexWeightedGraph& g, std::vector<Edge> tree_edges,
                                   Rational guarantee, std::string tag,
                                   Weight bound_total_weight);

// max(0, 3/4 - 3/n), reduced.
Rational cubic_guarantee(int n);
// max(0, 3/5 - 3/(5n)), reduced.
Rational clawfree_guarantee(int n);

} // namespace maxwist
