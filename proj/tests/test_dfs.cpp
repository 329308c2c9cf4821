#include <doctest.h>

#include <vector>

#include "maxwist/dfs.hpp"
#include "maxwist/graph.hpp"

using namespace maxwist;

namespace {

VertexWeightedGraph k4(std::vector<Weight> w) {
    return build_graph(4, std::move(w), {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
}

} // namespace

TEST_CASE("ratio criterion prefers high weight over low unvisited count") {
    // At the root every K4 neighbor has two unvisited neighbors, so the
    // heavy vertex wins; afterwards the chain is forced by u(x) = 0 ranking.
    auto g = k4({0, 5, 1, 1});
    auto t = run_greedy_dfs(g, 0, BranchCriterion::RatioWeightOverUnvisited);
    CHECK(t.order == std::vector<Vertex>{0, 1, 2, 3});
    CHECK(t.parent == std::vector<Vertex>{-1, 0, 1, 2});
    CHECK(t.tree_edges() == std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}});
    CHECK(t.backward_edges == std::vector<Edge>{{2, 0}, {3, 0}, {3, 1}});
}

TEST_CASE("u(x) = 0 outranks any finite ratio") {
    // At vertex 2 the choice is vertex 1 (all neighbors visited) against the
    // heavy vertex 3 that still leads somewhere. Exhausted wins.
    auto g = build_graph(5, {1, 1, 100, 1000, 1},
                         {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4}});
    auto t = run_greedy_dfs(g, 0, BranchCriterion::RatioWeightOverUnvisited);
    CHECK(t.order == std::vector<Vertex>{0, 2, 1, 3, 4});
    CHECK(t.parent[1] == 2);
    CHECK(t.parent[3] == 2);
}

TEST_CASE("ratio ties break toward the smaller index") {
    auto g = k4({0, 7, 7, 7});
    auto t = run_greedy_dfs(g, 0, BranchCriterion::RatioWeightOverUnvisited);
    CHECK(t.order == std::vector<Vertex>{0, 1, 2, 3});
}

TEST_CASE("max weight criterion ignores unvisited counts") {
    auto g = build_graph(5, {1, 1, 100, 1000, 1},
                         {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4}});
    auto t = run_greedy_dfs(g, 0, BranchCriterion::MaxWeight);
    // From 2 the heavy vertex 3 wins even though vertex 1 is exhausted.
    CHECK(t.order == std::vector<Vertex>{0, 2, 3, 4, 1});
    CHECK(t.parent[1] == 2);
}

TEST_CASE("alternative weight span overrides graph weights") {
    auto g = k4({0, 5, 1, 1});
    std::vector<Weight> alt{0, 1, 1, 5};
    auto t = run_greedy_dfs(g, 0, BranchCriterion::RatioWeightOverUnvisited, alt);
    CHECK(t.order == std::vector<Vertex>{0, 3, 1, 2});
}

TEST_CASE("tree accessors") {
    auto g = k4({0, 5, 1, 1});
    auto t = run_greedy_dfs(g, 0, BranchCriterion::RatioWeightOverUnvisited);
    CHECK(t.root == 0);
    CHECK(t.disc == std::vector<int>{0, 1, 2, 3});
    CHECK(t.child_count(0) == 1);
    CHECK(t.tree_degree(0) == 1);
    CHECK(t.tree_degree(1) == 2);
    CHECK(t.tree_degree(3) == 1);
    CHECK_FALSE(t.is_leaf(0)); // root never counts
    CHECK(t.is_leaf(3));
    CHECK(t.is_ancestor(0, 3));
    CHECK(t.is_ancestor(3, 3));
    CHECK_FALSE(t.is_ancestor(3, 0));
    auto ch = t.children(1);
    CHECK(std::vector<Vertex>(ch.begin(), ch.end()) == std::vector<Vertex>{2});
}

TEST_CASE("every backward edge joins a vertex to an ancestor") {
    // Petersen-like mesh: 3-regular, plenty of non-tree edges.
    auto g = build_graph(10, std::vector<Weight>(10, 1),
                         {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0},
                          {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},
                          {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}});
    for (Vertex r : {0, 3, 9}) {
        auto t = run_greedy_dfs(g, r, BranchCriterion::RatioWeightOverUnvisited);
        CHECK(static_cast<int>(t.tree_edges().size()) == 9);
        CHECK(static_cast<long long>(t.backward_edges.size()) == g.edge_count() - 9);
        for (auto [lower, upper] : t.backward_edges) {
            CHECK(t.is_ancestor(upper, lower));
            CHECK(upper != t.parent[lower]);
        }
    }
}

TEST_CASE("unvisited_count_at reconstructs decision-time counts") {
    auto g = k4({0, 5, 1, 1});
    auto t = run_greedy_dfs(g, 0, BranchCriterion::RatioWeightOverUnvisited);
    // Right after the root is discovered, vertex 1 still has neighbors 2, 3.
    CHECK(unvisited_count_at(t, g, 1, 0) == 2);
    // After vertex 1, vertex 2's only unvisited neighbor is 3.
    CHECK(unvisited_count_at(t, g, 2, 1) == 1);
    CHECK(unvisited_count_at(t, g, 3, 2) == 0);
}
