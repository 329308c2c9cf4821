#include <doctest.h>

#include <string>
#include <vector>

#include "maxwist/clawfree.hpp"
#include "maxwist/errors.hpp"
#include "maxwist/generators.hpp"
#include "maxwist/rational.hpp"
#include "maxwist/trace.hpp"
#include "maxwist/verifier.hpp"

using namespace maxwist;

namespace {

// Fork 3 saturates when leaf 4 rewires; leaf 5 then holds the whole of the
// fork's charge and its exceptional case is a no-op.
VertexWeightedGraph hold_whole_graph() {
    return build_graph(6, {1, 9, 8, 7, 6, 5},
                       {{0, 1}, {0, 2}, {0, 4}, {1, 2}, {1, 4},
                        {1, 5}, {2, 3}, {2, 5}, {3, 4}, {3, 5}});
}

// Fork 4 saturates when leaf 6 rewires, but the second anchored leaf at the
// fork's parent sits outside the fork subtree, so half the fork's charge
// never moves and leaf 5 must claim that free half during its exceptional
// case.
VertexWeightedGraph claim_half_graph() {
    return build_graph(9, {1, 10, 9, 8, 7, 5, 6, 4, 3},
                       {{0, 1}, {0, 6}, {0, 7}, {0, 8}, {1, 2}, {1, 6},
                        {2, 3}, {2, 4}, {2, 5}, {2, 6}, {3, 4}, {3, 5},
                        {3, 7}, {3, 8}, {4, 5}, {4, 6}, {7, 8}});
}

std::vector<std::string> case_labels(const Trace& trace) {
    std::vector<std::string> out;
    for (const auto& e : trace.events)
        if (e.kind == TraceEvent::Kind::Case)
            out.push_back("case " + e.label);
        else if (e.kind == TraceEvent::Kind::BadCase)
            out.push_back("badcase " + e.label);
    return out;
}

} // namespace

TEST_CASE("K5 walkthrough: hamiltonian path, no rewiring") {
    auto g = gen_named("complete", 5);
    Trace trace;
    auto sol = solve_clawfree(g, &trace);
    CHECK(sol.algorithm_tag == "clawfree");
    CHECK(sol.internal_weight == 3);
    CHECK(sol.total_weight == 5);
    CHECK(sol.bound_total_weight == 5);
    CHECK(compare(sol.guarantee, make_rational(12, 25)) == 0);
    CHECK(sol.tree_edges == std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}, {3, 4}});
    CHECK(trace.render() ==
          "graph 5 10\n"
          "root 0\n"
          "tree_edge 0 1\n"
          "tree_edge 1 2\n"
          "tree_edge 2 3\n"
          "tree_edge 3 4\n"
          "backward_edge 2 0\n"
          "backward_edge 3 0\n"
          "backward_edge 3 1\n"
          "backward_edge 4 0\n"
          "backward_edge 4 1\n"
          "backward_edge 4 2\n"
          "leaf 4 2 3 1 2 0 1 long\n"
          "rule1 1 4\n"
          "move 2 2 2 4\n"
          "rule1 2 4\n"
          "move 3 2 3 4\n"
          "interim 3 5\n"
          "good 4\n"
          "final 3 5\n"
          "end\n");
}

TEST_CASE("hold-whole walkthrough: case 1.1 then an exceptional no-op") {
    auto g = hold_whole_graph();
    Trace trace;
    auto sol = solve_clawfree(g, &trace);
    CHECK(sol.internal_weight == 30);
    CHECK(sol.bound_total_weight == 36);
    CHECK(compare(sol.guarantee, make_rational(1, 2)) == 0);
    CHECK(sol.tree_edges == std::vector<Edge>{{0, 4}, {1, 2}, {1, 4}, {2, 3}, {3, 5}});
    CHECK(trace.render() ==
          "graph 6 10\n"
          "root 0\n"
          "tree_edge 0 1\n"
          "tree_edge 1 2\n"
          "tree_edge 2 3\n"
          "tree_edge 3 4\n"
          "tree_edge 3 5\n"
          "backward_edge 2 0\n"
          "backward_edge 4 0\n"
          "backward_edge 4 1\n"
          "backward_edge 5 1\n"
          "backward_edge 5 2\n"
          "leaf 4 1 2 0 1 3 4 short\n"
          "leaf 5 2 3 1 2 3 5 short\n"
          "rule1 0 4\n"
          "move 1 18 1 4\n"
          "rule2 1 4 5\n"
          "move 2 8 2 4\n"
          "move 2 8 2 5\n"
          "rule1 2 5\n"
          "move 3 14 3 5\n"
          "interim 24 36\n"
          "good 4\n"
          "good 5\n"
          "eedge 1 0 4\n"
          "eedge 2 1 5\n"
          "case 1.1 4\n"
          "remove_edge 0 1\n"
          "remove_edge 3 4\n"
          "saturate 3 4\n"
          "add_edge 1 4\n"
          "add_edge 0 4\n"
          "move 2 8 4 free\n"
          "move 1 18 4 free\n"
          "case 2 5\n"
          "final 30 36\n"
          "end\n");
}

TEST_CASE("claim-half walkthrough: the exceptional case draws free charge") {
    auto g = claim_half_graph();
    Trace trace;
    auto run = run_clawfree_pipeline(g, &trace);

    // No degree-1 vertices, so nothing is zeroed.
    CHECK(run.zeroed_weights == g.weights());
    CHECK(run.tree.root == 0);
    CHECK(run.tree.order == std::vector<Vertex>{0, 1, 2, 3, 4, 6, 5, 7, 8});

    REQUIRE(run.leaves.size() == 3);
    const auto& c = run.leaves[0];
    CHECK(c.leaf == 6);
    CHECK(c.upper1 == 2);
    CHECK(c.below1 == 3);
    CHECK(c.upper2 == 1);
    CHECK(c.below2 == 2);
    CHECK(c.fork == 4);
    CHECK(c.fork_child == 6);
    CHECK(c.short_branch);
    const auto& a = run.leaves[1];
    CHECK(a.leaf == 5);
    CHECK(a.upper1 == 3);
    CHECK(a.below1 == 4);
    CHECK(a.fork == 4);
    CHECK(a.short_branch);
    const auto& x = run.leaves[2];
    CHECK(x.leaf == 8);
    CHECK(x.upper1 == 3);
    CHECK(x.below1 == 7);
    CHECK(x.fork == 3);
    CHECK(x.fork_child == 7);
    CHECK_FALSE(x.short_branch);

    // Only the fork with exactly two subtree leaves is deep.
    CHECK(run.deep == std::vector<char>{0, 0, 0, 0, 1, 0, 0, 0, 0});
    CHECK(run.interim_internal == 38);
    CHECK(run.bad_leaves.empty());

    REQUIRE(run.rewire_candidates.size() == 2);
    CHECK(run.rewire_candidates[0].edge == Edge{1, 2});
    CHECK(run.rewire_candidates[0].introducer == 6);
    CHECK(run.rewire_candidates[1].edge == Edge{2, 3});
    CHECK(run.rewire_candidates[1].introducer == 5);

    CHECK(run.solution.internal_weight == 44);
    CHECK(run.solution.bound_total_weight == 53);
    CHECK(compare(run.solution.guarantee, make_rational(8, 15)) == 0);

    // The exceptional case must top up from the fork's free half: the trace
    // shows "case 2" immediately followed by a claim out of location 4.
    std::string text = trace.render();
    auto pos = text.find("case 2 5\nmove 4 7 4 5\n");
    CHECK(pos != std::string::npos);

    auto report = audit_invariants(g, trace);
    CHECK(report.ok());
    CHECK(verify_solution(g, run.solution, BoundKind::Clawfree).ok());
}

TEST_CASE("pendant weights are zeroed and pendants may stay leaves") {
    // K4 plus pendants at 0 and 1: still claw-free, degree-1 allowed.
    auto g = build_graph(6, {1, 1, 1, 1, 1, 1},
                         {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {0, 4}, {1, 5}});
    Trace trace;
    auto run = run_clawfree_pipeline(g, &trace);
    CHECK(run.zeroed_weights == std::vector<Weight>{1, 1, 1, 1, 0, 0});
    CHECK(run.tree.root == 4); // minimum zeroed weight, smaller index on ties
    CHECK(run.solution.total_weight == 6);
    CHECK(run.solution.bound_total_weight == 4);
    CHECK(run.solution.internal_weight >= 2);
    CHECK(verify_solution(g, run.solution, BoundKind::Clawfree).ok());
    CHECK(audit_invariants(g, trace).ok());
}

TEST_CASE("every rewiring case appears on its pinned instance") {
    struct Probe {
        int base_n;
        const char* scheme;
        std::uint64_t seed;
        const char* label;
    };
    const Probe probes[] = {
        {8, "zero-one:0.4", 1, "case 1.1"},
        {10, "uniform:3", 1, "case 1.2"},
        {8, "uniform:5", 4, "case 2"},
        {12, "uniform:3", 1, "case 2"},
        {14, "uniform:3", 20, "case 3.1"},
        {12, "uniform:3", 4, "case 3.2"},
        {8, "uniform:5", 73, "badcase i"},
        {10, "uniform:5", 8, "badcase ii"},
        {8, "uniform:3", 298, "badcase iii"},
        {14, "uniform:3", 86, "badcase iv"},
    };
    for (const auto& p : probes) {
        CAPTURE(p.base_n);
        CAPTURE(p.seed);
        CAPTURE(p.label);
        GenSpec spec;
        spec.family = "line-graph-of-cubic-random";
        spec.n = p.base_n;
        spec.scheme = WeightScheme::parse(p.scheme);
        spec.seed = p.seed;
        auto g = generate(spec);
        Trace trace;
        auto sol = solve_clawfree(g, &trace);
        auto labels = case_labels(trace);
        bool found = false;
        for (const auto& l : labels)
            found = found || l == p.label;
        CHECK(found);
        CHECK(verify_solution(g, sol, BoundKind::Clawfree).ok());
        CHECK(audit_invariants(g, trace).ok());
    }
}

TEST_CASE("input validation order: degree check, then claw check") {
    // C4 is claw-free but all degree 2.
    auto c4 = build_graph(4, {1, 1, 1, 1}, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    try {
        solve_clawfree(c4);
        FAIL("expected throw");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::HasDegreeTwoVertex);
    }
    try {
        solve_clawfree(gen_named("petersen"));
        FAIL("expected throw");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotClawFree);
    }
    // Degree 2 wins even when the graph also has claws.
    auto both = build_graph(5, {1, 1, 1, 1, 1}, {{0, 1}, {0, 2}, {0, 3}, {3, 4}});
    try {
        solve_clawfree(both);
        FAIL("expected throw");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::HasDegreeTwoVertex);
    }
}

TEST_CASE("epsilon wrapper dispatch and validation") {
    auto g = gen_named("complete", 5);
    // n = 5 < 1/eps for eps = 1/6: oracle.
    auto exact = approx_clawfree(g, make_rational(1, 6));
    CHECK(exact.algorithm_tag == "exact");
    CHECK(exact.internal_weight == 3);
    // eps = 1/2: threshold 2, pipeline runs.
    auto greedy = approx_clawfree(g, make_rational(1, 2));
    CHECK(greedy.algorithm_tag == "clawfree");

    CHECK_THROWS_AS(approx_clawfree(g, make_rational(0, 1)), Error);
    CHECK_THROWS_AS(approx_clawfree(g, make_rational(3, 5)), Error);
    try {
        approx_clawfree(g, make_rational(7, 10));
        FAIL("expected throw");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::InvalidEpsilon);
    }
    try {
        approx_clawfree(gen_named("petersen"), make_rational(1, 2));
        FAIL("expected throw");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotClawFree);
    }
}

TEST_CASE("bulk spot check across sizes and schemes") {
    for (int base_n : {8, 10, 12}) {
        for (std::uint64_t seed : {11ULL, 12ULL, 13ULL}) {
            GenSpec spec;
            spec.family = "line-graph-of-cubic-random";
            spec.n = base_n;
            spec.scheme = WeightScheme::parse("uniform:7");
            spec.seed = seed;
            auto g = generate(spec);
            Trace trace;
            auto sol = solve_clawfree(g, &trace);
            CHECK(verify_solution(g, sol, BoundKind::Clawfree).ok());
            CHECK(audit_invariants(g, trace).ok());
        }
    }
}
