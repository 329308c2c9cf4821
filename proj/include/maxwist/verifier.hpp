#pragma once

#include <string>
#include <vector>

#include "maxwist/graph.hpp"
#include "maxwist/rational.hpp"
#include "maxwist/solution.hpp"
#include "maxwist/trace.hpp"

namespace maxwist {

// Which guarantee a tree is checked against.
enum class BoundKind { None, Cubic, Clawfree };

// "cubic" -> Cubic, "clawfree" -> Clawfree, anything else -> None.
BoundKind bound_kind_for_tag(const std::string& tag);
BoundKind parse_bound_kind(const std::string& text); // "cubic" | "clawfree" | "none"

struct VerificationReport {
    bool is_spanning = false;
    Weight internal_weight = 0;       // recomputed, never trusted
    Weight total_weight = 0;          // original weights
    Weight zeroed_total_weight = 0;   // degree-1 weights zeroed
    Rational bound{0, 1};
    bool bound_satisfied = false;
    std::vector<std::string> violations; // "<label>: <detail>"

    bool ok() const { return is_spanning && bound_satisfied && violations.empty(); }
    // Stable key-value lines, one per field, then one "violation ..." line each.
    std::string render() const;
};

// Structural check of an edge set against the graph: spanning tree via
// union-find, internal weight from recomputed degrees, bound per kind
// (cubic checks against the full weight, claw-free against the degree-1
// zeroed weight). Failures land in the report, never in exceptions.
VerificationReport verify_tree(const VertexWeightedGraph& g, const std::vector<Edge>& edges,
                               BoundKind kind);

// verify_tree plus cross-checks of every solution field. Recomputes from
// scratch; deliberately never calls solver code.
VerificationReport verify_solution(const VertexWeightedGraph& g, const SpanningTreeSolution& sol,
                                   BoundKind kind);

// Replays a solver trace against the graph, checking every step: the
// announced tree is a binary DFS tree of g, non-tree edges close
// ancestor-descendant pairs, no internal vertex touches three leaves, edges
// are never removed or added twice, charge moves never overdraw and the
// total is conserved, the final tree spans, and every final non-root leaf
// holds five times its weight in half-units.
VerificationReport audit_invariants(const VertexWeightedGraph& g, const Trace& trace);

// Every violation label audit_invariants can emit (for the meta-test that
// forges each one).
const std::vector<std::string>& audit_violation_labels();

} // namespace maxwist
