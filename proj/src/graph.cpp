#include "maxwist/graph.hpp"

#include <algorithm>
#include <string>

#include "maxwist/errors.hpp"

namespace maxwist {

VertexWeightedGraph::VertexWeightedGraph(int n, std::vector<Weight> weights,
                                         const std::vector<Edge>& edges) {
    if (n <= 0)
        raise(ErrorCode::ParseError, "graph needs at least one vertex");
    if (static_cast<int>(weights.size()) != n)
        raise(ErrorCode::ParseError, "expected " + std::to_string(n) + " weights, got " +
                                         std::to_string(weights.size()));
    for (int v = 0; v < n; ++v)
        if (weights[v] < 0)
            raise(ErrorCode::NegativeWeight, "vertex " + std::to_string(v));

    std::vector<Edge> norm;
    norm.reserve(edges.size());
    for (const auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            raise(ErrorCode::IndexOutOfRange,
                  "edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
        if (u == v)
            raise(ErrorCode::SelfLoop, "vertex " + std::to_string(u));
        norm.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(norm.begin(), norm.end());
    for (std::size_t i = 1; i < norm.size(); ++i)
        if (norm[i] == norm[i - 1])
            raise(ErrorCode::DuplicateEdge, "edge (" + std::to_string(norm[i].first) + "," +
                                                std::to_string(norm[i].second) + ")");

    n_ = n;
    m_ = static_cast<long long>(norm.size());
    weights_ = std::move(weights);
    for (int v = 0; v < n; ++v)
        total_weight_ += weights_[v];

    std::vector<int> deg(n, 0);
    for (const auto& [u, v] : norm) {
        ++deg[u];
        ++deg[v];
    }
    adj_start_.assign(n + 1, 0);
    for (int v = 0; v < n; ++v)
        adj_start_[v + 1] = adj_start_[v] + deg[v];
    adj_flat_.resize(adj_start_[n]);
    std::vector<int> fill(adj_start_.begin(), adj_start_.end() - 1);
    for (const auto& [u, v] : norm) {
        adj_flat_[fill[u]++] = v;
        adj_flat_[fill[v]++] = u;
    }
    // norm is sorted, so each neighbor list comes out ascending except for the
    // lower endpoints pushed by their partners; sort to make it uniform.
    for (int v = 0; v < n; ++v)
        std::sort(adj_flat_.begin() + adj_start_[v], adj_flat_.begin() + adj_start_[v + 1]);

    // Connectivity (iterative DFS over CSR).
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u : neighbors(v))
            if (!seen[u]) {
                seen[u] = 1;
                ++reached;
                stack.push_back(u);
            }
    }
    if (reached != n)
        raise(ErrorCode::Disconnected,
              std::to_string(reached) + " of " + std::to_string(n) + " vertices reachable");
}

bool VertexWeightedGraph::has_edge(Vertex u, Vertex v) const {
    if (u < 0 || u >= n_ || v < 0 || v >= n_ || u == v)
        return false;
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> VertexWeightedGraph::edges() const {
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (int v = 0; v < n_; ++v)
        for (int u : neighbors(v))
            if (v < u)
                out.emplace_back(v, u);
    return out;
}

VertexWeightedGraph build_graph(int n, std::vector<Weight> weights, const std::vector<Edge>& edges) {
    return VertexWeightedGraph(n, std::move(weights), edges);
}

bool is_cubic(const VertexWeightedGraph& g) {
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) != 3)
            return false;
    return true;
}

bool is_claw_free(const VertexWeightedGraph& g) {
    for (int v = 0; v < g.vertex_count(); ++v) {
        auto nb = g.neighbors(v);
        int d = static_cast<int>(nb.size());
        for (int i = 0; i < d; ++i)
            for (int j = i + 1; j < d; ++j) {
                if (g.has_edge(nb[i], nb[j]))
                    continue;
                for (int k = j + 1; k < d; ++k)
                    if (!g.has_edge(nb[i], nb[k]) && !g.has_edge(nb[j], nb[k]))
                        return false;
            }
    }
    return true;
}

int min_degree(const VertexWeightedGraph& g) {
    int best = g.degree(0);
    for (int v = 1; v < g.vertex_count(); ++v)
        best = std::min(best, g.degree(v));
    return best;
}

Weight closed_neighborhood_weight(const VertexWeightedGraph& g, Vertex v) {
    if (v < 0 || v >= g.vertex_count())
        raise(ErrorCode::IndexOutOfRange, "vertex " + std::to_string(v));
    Weight sum = g.weight(v);
    for (int u : g.neighbors(v))
        sum += g.weight(u);
    return sum;
}

std::vector<Weight> degree_one_zeroed_weights(const VertexWeightedGraph& g) {
    std::vector<Weight> w = g.weights();
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) == 1)
            w[v] = 0;
    return w;
}

} // namespace maxwist
