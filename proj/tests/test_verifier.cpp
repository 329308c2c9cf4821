#include <doctest.h>

#include <string>
#include <vector>

#include "maxwist/clawfree.hpp"
#include "maxwist/cubic.hpp"
#include "maxwist/errors.hpp"
#include "maxwist/generators.hpp"
#include "maxwist/oracle.hpp"
#include "maxwist/verifier.hpp"

using namespace maxwist;

namespace {

bool has_violation(const VerificationReport& r, const std::string& label) {
    for (const auto& v : r.violations)
        if (v.rfind(label + ":", 0) == 0)
            return true;
    return false;
}

// Minimal audit-clean claw-free trace of the K5 run: path tree, two rule
// moves topping up the single leaf, matching final line.
std::string k5_trace_text() {
    return "graph 5 10\n"
           "root 0\n"
           "tree_edge 0 1\n"
           "tree_edge 1 2\n"
           "tree_edge 2 3\n"
           "tree_edge 3 4\n"
           "move 2 2 2 4\n"
           "move 3 2 3 4\n"
           "final 3 5\n"
           "end\n";
}

VerificationReport audit_text(const VertexWeightedGraph& g, const std::string& text) {
    return audit_invariants(g, Trace::parse_string(text));
}

} // namespace

TEST_CASE("bound kinds from tags and text") {
    CHECK(bound_kind_for_tag("cubic") == BoundKind::Cubic);
    CHECK(bound_kind_for_tag("clawfree") == BoundKind::Clawfree);
    CHECK(bound_kind_for_tag("exact") == BoundKind::None);
    CHECK(bound_kind_for_tag("anything") == BoundKind::None);
    CHECK(parse_bound_kind("cubic") == BoundKind::Cubic);
    CHECK(parse_bound_kind("clawfree") == BoundKind::Clawfree);
    CHECK(parse_bound_kind("none") == BoundKind::None);
    CHECK_THROWS_AS(parse_bound_kind("staple"), Error);
}

TEST_CASE("verify_tree accepts solver output") {
    auto prism = gen_named("prism");
    auto cubic = solve_cubic(prism);
    auto r = verify_tree(prism, cubic.tree_edges, BoundKind::Cubic);
    CHECK(r.ok());
    CHECK(r.internal_weight == 4);
    CHECK(r.total_weight == 6);

    auto k5 = gen_named("complete", 5);
    auto claw = solve_clawfree(k5);
    auto rc = verify_tree(k5, claw.tree_edges, BoundKind::Clawfree);
    CHECK(rc.ok());
    CHECK(rc.render() ==
          "spanning true\n"
          "internal 3\n"
          "total 5\n"
          "zeroed_total 5\n"
          "bound 12/25\n"
          "bound_satisfied true\n"
          "violations 0\n");
}

TEST_CASE("verify_tree flags structural defects") {
    auto k5 = gen_named("complete", 5);
    auto r = verify_tree(k5, {{0, 1}, {1, 2}}, BoundKind::None);
    CHECK_FALSE(r.ok());
    CHECK(has_violation(r, "edge-count"));

    r = verify_tree(k5, {{0, 1}, {1, 2}, {2, 3}, {3, 9}}, BoundKind::None);
    CHECK(has_violation(r, "edge-not-in-graph"));

    r = verify_tree(k5, {{0, 1}, {1, 2}, {2, 3}, {2, 3}}, BoundKind::None);
    CHECK(has_violation(r, "duplicate-edge"));

    auto star = gen_named("k13");
    r = verify_tree(star, {{0, 1}, {0, 2}, {1, 2}}, BoundKind::None);
    CHECK(has_violation(r, "edge-not-in-graph")); // (1,2) not a star edge

    r = verify_tree(k5, {{0, 1}, {1, 2}, {0, 2}, {3, 4}}, BoundKind::None);
    CHECK(has_violation(r, "cycle"));
    CHECK_FALSE(r.is_spanning);

    r = verify_tree(k5, {{0, 1}, {1, 2}, {2, 3}, {1, 3}}, BoundKind::None);
    CHECK(has_violation(r, "cycle"));
}

TEST_CASE("verify_tree evaluates the bound for the requested kind") {
    // Heavy vertex 5 ends up a leaf: internal weight 0 misses 1/4 of 9.
    auto g = build_graph(6, {0, 0, 0, 0, 0, 9},
                         {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}, {0, 3}, {1, 4}, {2, 5}});
    std::vector<Edge> tree{{2, 5}, {0, 2}, {0, 1}, {1, 4}, {3, 4}};
    auto r = verify_tree(g, tree, BoundKind::Cubic);
    CHECK(r.is_spanning);
    CHECK(r.violations.empty());
    CHECK_FALSE(r.bound_satisfied);
    CHECK_FALSE(r.ok());
    // The same tree with no bound requested is fine.
    CHECK(verify_tree(g, tree, BoundKind::None).ok());

    // Clawfree bounds divide by the zeroed total.
    auto pend = build_graph(6, {1, 1, 1, 1, 1, 1},
                            {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {0, 4}, {1, 5}});
    auto rz = verify_tree(pend, {{0, 4}, {0, 1}, {1, 2}, {2, 3}, {1, 5}}, BoundKind::Clawfree);
    CHECK(rz.zeroed_total_weight == 4);
    CHECK(rz.total_weight == 6);
    CHECK(rz.internal_weight == 3);
    CHECK(rz.ok());
}

TEST_CASE("verify_solution cross-checks every claimed field") {
    auto k5 = gen_named("complete", 5);
    auto sol = solve_clawfree(k5);
    CHECK(verify_solution(k5, sol, BoundKind::Clawfree).ok());

    auto tampered = sol;
    tampered.internal_weight += 1;
    CHECK(has_violation(verify_solution(k5, tampered, BoundKind::Clawfree), "internal-mismatch"));

    tampered = sol;
    tampered.total_weight -= 1;
    CHECK(has_violation(verify_solution(k5, tampered, BoundKind::Clawfree), "total-mismatch"));

    tampered = sol;
    tampered.guarantee = make_rational(1, 2);
    CHECK(has_violation(verify_solution(k5, tampered, BoundKind::Clawfree), "guarantee-mismatch"));

    tampered = sol;
    tampered.bound_total_weight = 3;
    CHECK(
        has_violation(verify_solution(k5, tampered, BoundKind::Clawfree), "bound-total-mismatch"));

    // Unknown tags still must honor the ratio they claim.
    auto exact = solve_exact(k5);
    CHECK(verify_solution(k5, exact, BoundKind::None).ok());
    exact.guarantee = make_rational(9, 10);
    CHECK(has_violation(verify_solution(k5, exact, BoundKind::None), "claimed-bound"));
}

TEST_CASE("audit accepts a well-formed trace") {
    auto k5 = gen_named("complete", 5);
    auto r = audit_text(k5, k5_trace_text());
    CHECK(r.ok());
    CHECK(r.internal_weight == 3);
    CHECK(r.zeroed_total_weight == 5);
    CHECK(r.violations.empty());
}

TEST_CASE("audit catches every forged trace") {
    auto k5 = gen_named("complete", 5);

    SUBCASE("graph-shape: announced sizes disagree") {
        auto r = audit_text(k5, "graph 5 9\n" + k5_trace_text().substr(11));
        CHECK(has_violation(r, "graph-shape"));
    }

    SUBCASE("graph-shape: trace does not start with the graph line") {
        auto r = audit_text(k5, k5_trace_text().substr(11));
        CHECK(has_violation(r, "graph-shape"));
    }

    SUBCASE("trace-shape: events after end") {
        auto r = audit_text(k5, k5_trace_text() + "move 2 1 4 3\n");
        CHECK(has_violation(r, "trace-shape"));
    }

    SUBCASE("trace-shape: missing final and end") {
        auto r = audit_text(k5, "graph 5 10\nroot 0\ntree_edge 0 1\n");
        CHECK(has_violation(r, "trace-shape"));
    }

    SUBCASE("trace-shape: child discovered twice") {
        std::string t = k5_trace_text();
        t.insert(t.find("move"), "tree_edge 0 2\ntree_edge 1 2\n");
        auto r = audit_text(k5, t);
        CHECK(has_violation(r, "trace-shape"));
    }

    SUBCASE("edge-not-in-graph: tree edge the graph lacks") {
        auto star = gen_named("k13");
        auto r = audit_text(star,
                            "graph 4 3\nroot 0\ntree_edge 0 1\ntree_edge 1 2\ntree_edge 2 3\n"
                            "final 0 1\nend\n");
        CHECK(has_violation(r, "edge-not-in-graph"));
    }

    SUBCASE("three-children: ternary branching") {
        auto r = audit_text(k5,
                            "graph 5 10\nroot 0\ntree_edge 0 1\ntree_edge 0 2\ntree_edge 0 3\n"
                            "tree_edge 3 4\nfinal 1 5\nend\n");
        CHECK(has_violation(r, "three-children"));
    }

    SUBCASE("backward-edge-ancestry: endpoints unrelated in the tree") {
        std::string t = k5_trace_text();
        t.insert(t.find("move"), "backward_edge 1 4\n");
        auto r = audit_text(k5, t);
        CHECK(has_violation(r, "backward-edge-ancestry"));
    }

    SUBCASE("double-removal") {
        std::string t = k5_trace_text();
        t.insert(t.find("final"), "remove_edge 3 4\nremove_edge 3 4\nadd_edge 0 4\n");
        auto r = audit_text(k5, t);
        CHECK(has_violation(r, "double-removal"));
    }

    SUBCASE("tree-edge-missing: removing an edge the tree never had") {
        std::string t = k5_trace_text();
        t.insert(t.find("final"), "remove_edge 0 2\n");
        auto r = audit_text(k5, t);
        CHECK(has_violation(r, "tree-edge-missing"));
    }

    SUBCASE("double-add") {
        std::string t = k5_trace_text();
        t.insert(t.find("final"), "remove_edge 3 4\nadd_edge 0 4\nadd_edge 0 4\n");
        auto r = audit_text(k5, t);
        CHECK(has_violation(r, "double-add"));
    }

    SUBCASE("conservation: overdraw") {
        std::string t = k5_trace_text();
        t.insert(t.find("final"), "move 2 9 2 4\n");
        auto r = audit_text(k5, t);
        CHECK(has_violation(r, "conservation"));
    }

    SUBCASE("not-spanning: rewire leaves two components") {
        std::string t = k5_trace_text();
        t.insert(t.find("final"), "remove_edge 3 4\n");
        auto r = audit_text(k5, t);
        CHECK(has_violation(r, "not-spanning"));
        CHECK_FALSE(r.is_spanning);
    }

    SUBCASE("leaf-charge: leaf left below its target") {
        auto r = audit_text(k5,
                            "graph 5 10\nroot 0\ntree_edge 0 1\ntree_edge 1 2\ntree_edge 2 3\n"
                            "tree_edge 3 4\nfinal 3 5\nend\n");
        REQUIRE(r.violations.size() == 1);
        CHECK(has_violation(r, "leaf-charge"));
    }

    SUBCASE("root-charge: root holdings moved away") {
        std::string t = k5_trace_text();
        t.insert(t.find("final"), "move 0 2 0 4\n");
        auto r = audit_text(k5, t);
        REQUIRE(r.violations.size() == 1);
        CHECK(has_violation(r, "root-charge"));
    }

    SUBCASE("leaf-adjacency: internal vertex touching three leaves") {
        // Not claw-free, which is exactly why the audit must notice.
        auto g = build_graph(6, {1, 1, 1, 1, 1, 1},
                             {{0, 1}, {1, 2}, {1, 3}, {2, 3}, {2, 4}, {2, 5}});
        auto r = audit_text(g,
                            "graph 6 6\nroot 0\ntree_edge 0 1\ntree_edge 1 2\ntree_edge 1 3\n"
                            "tree_edge 2 4\ntree_edge 2 5\n"
                            "move 1 2 1 3\nmove 2 2 2 3\n"
                            "final 2 3\nend\n");
        REQUIRE(r.violations.size() == 1);
        CHECK(has_violation(r, "leaf-adjacency"));
    }

    SUBCASE("final-mismatch: announcement disagrees with the replay") {
        std::string t = k5_trace_text();
        t.replace(t.find("final 3 5"), 9, "final 4 5");
        auto r = audit_text(k5, t);
        REQUIRE(r.violations.size() == 1);
        CHECK(has_violation(r, "final-mismatch"));
    }
}

TEST_CASE("the advertised label list matches what the auditor can emit") {
    const auto& labels = audit_violation_labels();
    CHECK(labels.size() == 14);
    for (const char* expect :
         {"graph-shape", "trace-shape", "edge-not-in-graph", "three-children",
          "backward-edge-ancestry", "leaf-adjacency", "double-removal", "tree-edge-missing",
          "double-add", "conservation", "not-spanning", "leaf-charge", "root-charge",
          "final-mismatch"}) {
        bool found = false;
        for (const auto& l : labels)
            found = found || l == expect;
        CHECK(found);
    }
}
