#include "maxwist/cubic.hpp"

#include <algorithm>
#include <string>

#include "maxwist/errors.hpp"

namespace maxwist {

Vertex select_root_cubic(const VertexWeightedGraph& g) {
    if (!is_cubic(g))
        raise(ErrorCode::NotCubic, "root selection needs a 3-regular graph");
    Vertex best = 0;
    Weight best_w = closed_neighborhood_weight(g, 0);
    for (Vertex v = 1; v < g.vertex_count(); ++v) {
        Weight w = closed_neighborhood_weight(g, v);
        if (w < best_w) {
            best = v;
            best_w = w;
        }
    }
    // Sum over v of w(N[v]) is exactly 4 w(V) on a cubic graph, so the
    // minimum is at most 4 w(V) / n.
    if (static_cast<__int128>(best_w) * g.vertex_count() > static_cast<__int128>(4) * g.total_weight())
        raise(ErrorCode::InvariantViolation, "root neighborhood exceeds 4 w(V) / n");
    return best;
}

DfsTree greedy_cubic_tree(const VertexWeightedGraph& g) {
    return run_greedy_dfs(g, select_root_cubic(g), BranchCriterion::RatioWeightOverUnvisited);
}

SpanningTreeSolution solve_cubic(const VertexWeightedGraph& g) {
    DfsTree t = greedy_cubic_tree(g);
    SpanningTreeSolution sol = make_solution(g, t.tree_edges(), cubic_guarantee(g.vertex_count()),
                                             "cubic", g.total_weight());
    if (sol.total_weight > 0 &&
        !ratio_at_least(sol.internal_weight, sol.total_weight, sol.guarantee))
        raise(ErrorCode::InvariantViolation,
              "internal weight " + std::to_string(sol.internal_weight) + " below " +
                  to_string(sol.guarantee) + " of " + std::to_string(sol.total_weight));
    return sol;
}

SpanningTreeSolution approx_cubic(const VertexWeightedGraph& g, const Rational& epsilon,
                                  int oracle_cap) {
    if (compare(epsilon, {0, 1}) <= 0 || compare(epsilon, {3, 4}) >= 0)
        raise(ErrorCode::InvalidEpsilon, to_string(epsilon) + " outside (0, 3/4)");
    if (!is_cubic(g))
        raise(ErrorCode::NotCubic, "epsilon scheme needs a 3-regular graph");
    // n <= 3/eps  <=>  n * num <= 3 * den
    if (static_cast<__int128>(g.vertex_count()) * epsilon.num <=
        static_cast<__int128>(3) * epsilon.den)
        return solve_exact(g, oracle_cap);
    return solve_cubic(g);
}

namespace {

// The unique child of xp whose subtree contains a.
Vertex child_toward(const DfsTree& t, Vertex xp, Vertex a) {
    for (Vertex c : t.children(xp))
        if (t.is_ancestor(c, a))
            return c;
    raise(ErrorCode::InvariantViolation,
          "no child of " + std::to_string(xp) + " leads to " + std::to_string(a));
}

[[noreturn]] void leaf_fail(Vertex leaf, const std::string& what) {
    raise(ErrorCode::InvariantViolation, "leaf " + std::to_string(leaf) + ": " + what);
}

// Walks the alternating tree/backward path that starts with the backward
// edge (a, first_upper); returns the visited x_i in order. uppers_of[v]
// lists the upper endpoints of backward edges whose lower endpoint is v.
std::vector<Vertex> ascend_path(const VertexWeightedGraph& g, const DfsTree& t,
                                const std::vector<std::vector<Vertex>>& uppers_of, Vertex a,
                                Vertex first_upper) {
    std::vector<Vertex> path;
    Vertex xp = first_upper; // x'_i
    for (;;) {
        Vertex x = child_toward(t, xp, a);
        if (x == a)
            leaf_fail(a, "ascend path fell back onto the leaf");
        path.push_back(x);
        int u = unvisited_count_at(t, g, x, xp);
        if (u == 2) {
            // Terminal step: x'_k is the root or has tree degree 2.
            if (xp != t.root && t.tree_degree(xp) != 2)
                leaf_fail(a, "terminal upper " + std::to_string(xp) + " has tree degree " +
                                 std::to_string(t.tree_degree(xp)));
            return path;
        }
        if (u != 1)
            leaf_fail(a, "u(" + std::to_string(x) + ") = " + std::to_string(u) +
                             " while processing " + std::to_string(xp));
        // Intermediate pair: both ends of the tree edge have degree 2.
        if (t.tree_degree(x) != 2)
            leaf_fail(a, "path vertex " + std::to_string(x) + " has tree degree " +
                             std::to_string(t.tree_degree(x)));
        if (t.tree_degree(xp) != 2)
            leaf_fail(a, "path upper " + std::to_string(xp) + " has tree degree " +
                             std::to_string(t.tree_degree(xp)));
        // u(x) = 1 forces x to close a backward edge of its own; follow it.
        if (uppers_of[x].size() != 1)
            leaf_fail(a, "path vertex " + std::to_string(x) + " has " +
                             std::to_string(uppers_of[x].size()) + " backward edges, expected 1");
        xp = uppers_of[x][0];
    }
}

} // namespace

PathLemmaReport check_path_lemma(const VertexWeightedGraph& g, const DfsTree& t) {
    if (!is_cubic(g))
        raise(ErrorCode::NotCubic, "path lemma applies to 3-regular graphs");
    const int n = g.vertex_count();

    // Backward edges indexed by lower endpoint.
    std::vector<std::vector<Vertex>> uppers_of(n);
    for (const auto& [lower, upper] : t.backward_edges)
        uppers_of[lower].push_back(upper);

    PathLemmaReport report;
    std::vector<int> multiplicity(n, 0);

    for (Vertex a = 0; a < n; ++a) {
        if (!t.is_leaf(a))
            continue;
        auto& ups = uppers_of[a];
        if (ups.size() != 2)
            leaf_fail(a, std::to_string(ups.size()) + " backward edges, expected 2");
        Vertex deeper = ups[0], higher = ups[1];
        if (t.disc[deeper] < t.disc[higher])
            std::swap(deeper, higher);

        // The leaf still has its parent unvisited at the deeper upper's turn
        // and both the parent and the deeper upper at the higher one's.
        if (unvisited_count_at(t, g, a, deeper) != 1)
            leaf_fail(a, "u(leaf) != 1 at the deeper backward edge");
        if (unvisited_count_at(t, g, a, higher) != 2)
            leaf_fail(a, "u(leaf) != 2 at the higher backward edge");

        PathLemmaLeafCheck check;
        check.leaf = a;
        check.b_path = ascend_path(g, t, uppers_of, a, deeper);
        check.c_path = ascend_path(g, t, uppers_of, a, higher);
        for (Vertex v : check.b_path)
            check.b_sum += g.weight(v);
        for (Vertex v : check.c_path)
            check.c_sum += g.weight(v);

        if (check.b_sum < 2 * g.weight(a))
            leaf_fail(a, "deeper path sum " + std::to_string(check.b_sum) + " < 2 w(leaf)");
        if (check.c_sum < g.weight(a))
            leaf_fail(a, "higher path sum " + std::to_string(check.c_sum) + " < w(leaf)");
        if (check.b_sum + check.c_sum < 3 * g.weight(a))
            leaf_fail(a, "combined path sum below 3 w(leaf)");

        for (Vertex v : check.b_path) {
            if (t.tree_degree(v) < 2)
                leaf_fail(a, "collected vertex " + std::to_string(v) + " is not internal");
            ++multiplicity[v];
        }
        for (Vertex v : check.c_path) {
            if (t.tree_degree(v) < 2)
                leaf_fail(a, "collected vertex " + std::to_string(v) + " is not internal");
            ++multiplicity[v];
        }

        ++report.leaves_checked;
        report.leaves.push_back(std::move(check));
    }

    // The collected sets are pairwise disjoint except that the root's unique
    // child may appear twice (when the root closes two backward edges).
    Vertex root_child = t.child_count(t.root) == 1 ? t.children(t.root)[0] : -1;
    for (Vertex v = 0; v < n; ++v) {
        if (multiplicity[v] <= 1)
            continue;
        if (v != root_child)
            raise(ErrorCode::InvariantViolation,
                  "vertex " + std::to_string(v) + " appears in " +
                      std::to_string(multiplicity[v]) + " collected sets");
        if (multiplicity[v] > 2)
            raise(ErrorCode::InvariantViolation,
                  "root child appears in " + std::to_string(multiplicity[v]) + " collected sets");
    }

    return report;
}

} // namespace maxwist
