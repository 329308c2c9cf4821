#pragma once

#include <vector>

#include "maxwist/dfs.hpp"
#include "maxwist/graph.hpp"
#include "maxwist/rational.hpp"
#include "maxwist/solution.hpp"
#include "maxwist/trace.hpp"

namespace maxwist {

// Everything the rewiring stage needs to know about one tree leaf. All
// fields describe the unmodified DFS tree; backward edges are the leaf's
// non-tree edges and always lead to ancestors.
struct LeafAnnotation {
    Vertex leaf = -1;
    // Upper endpoints of the leaf's two deepest backward edges, deepest
    // first, and the child of each on the tree path down to the leaf.
    Vertex upper1 = -1;
    Vertex upper2 = -1;
    Vertex below1 = -1;
    Vertex below2 = -1;
    // Nearest ancestor of tree degree 3 (the root when none exists) and its
    // child on the path down to the leaf.
    Vertex fork = -1;
    Vertex fork_child = -1;
    // True when the leaf hangs directly off the fork.
    bool short_branch = false;
};

// Intermediate and final state of one claw-free run, exposed for tests.
struct ClawfreeRun {
    std::vector<Weight> zeroed_weights; // degree-1 weights zeroed
    DfsTree tree;                       // max-weight greedy DFS tree
    std::vector<LeafAnnotation> leaves; // leaves with >= 2 backward edges, discovery order
    std::vector<char> deep;             // degree-3 vertices whose subtree has exactly two leaves
    Weight interim_internal = 0;        // internal weight before any rewiring
    std::vector<Vertex> bad_leaves;     // leaves below the 5/2 charge target, discovery order
    struct IntroducedEdge {
        Edge edge; // tree edge joining the leaf's two deepest upper endpoints
        Vertex introducer;
    };
    std::vector<IntroducedEdge> rewire_candidates;
    std::vector<Edge> final_edges; // edges of the rewired tree, normalized
    SpanningTreeSolution solution;
};

// Runs the full pipeline: zero degree-1 weights, pick a minimum-weight root,
// grow a max-weight greedy DFS tree, distribute internal charges to the
// leaves, then rewire until every non-root leaf holds 5/2 times its own
// weight in charge. Raises HasDegreeTwoVertex / NotClawFree on bad input and
// InvariantViolation or InsufficientCharge if any step breaks its contract.
ClawfreeRun run_clawfree_pipeline(const VertexWeightedGraph& g, Trace* trace = nullptr);

// Internal weight at least (3/5 - 3/(5n)) of the degree-1-zeroed total;
// asserted before returning.
SpanningTreeSolution solve_clawfree(const VertexWeightedGraph& g, Trace* trace = nullptr);

// Solves exactly when n < 1/epsilon, otherwise via the pipeline;
// 0 < epsilon < 3/5. Either way the internal weight is >= (3/5 - epsilon)
// times the optimum over the zeroed weights.
SpanningTreeSolution approx_clawfree(const VertexWeightedGraph& g, const Rational& epsilon,
                                     int oracle_cap = 16);

} // namespace maxwist
