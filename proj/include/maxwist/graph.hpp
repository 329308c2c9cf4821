#pragma once

#include <span>
#include <utility>
#include <vector>

#include "maxwist/bigalloc.hpp"

namespace maxwist {

using Vertex = int;
using Weight = long long;
using Edge = std::pair<Vertex, Vertex>;

// Simple undirected connected graph with non-negative integer vertex weights.
// Adjacency is stored CSR-style, each neighbor list sorted ascending.
// Immutable after construction; the constructor validates everything.
class VertexWeightedGraph {
public:
    VertexWeightedGraph(int n, std::vector<Weight> weights, const std::vector<Edge>& edges);

    int vertex_count() const { return n_; }
    long long edge_count() const { return m_; }

    std::span<const Vertex> neighbors(Vertex v) const {
        return {adj_flat_.data() + adj_start_[v], adj_flat_.data() + adj_start_[v + 1]};
    }
    int degree(Vertex v) const { return adj_start_[v + 1] - adj_start_[v]; }

    // Warm the lines a later neighbors(v) will load. Traversals that jump
    // between unrelated vertices are bound by these dependent fetches; the
    // index line can be requested as soon as v is known, the row line once
    // the index entry is cheap to read.
    void prefetch_neighbor_index(Vertex v) const { __builtin_prefetch(adj_start_.data() + v); }
    void prefetch_neighbor_row(Vertex v) const {
        __builtin_prefetch(adj_flat_.data() + adj_start_[v]);
    }

    Weight weight(Vertex v) const { return weights_[v]; }
    const std::vector<Weight>& weights() const { return weights_; }
    Weight total_weight() const { return total_weight_; }

    bool has_edge(Vertex u, Vertex v) const;

    // All edges as (u, v) with u < v, sorted lexicographically.
    std::vector<Edge> edges() const;

private:
    int n_ = 0;
    long long m_ = 0;
    std::vector<int, BigAllocator<int>> adj_start_;
    std::vector<Vertex, BigAllocator<Vertex>> adj_flat_;
    std::vector<Weight> weights_;
    Weight total_weight_ = 0;
};

VertexWeightedGraph build_graph(int n, std::vector<Weight> weights, const std::vector<Edge>& edges);

bool is_cubic(const VertexWeightedGraph& g);

// True iff no vertex has three pairwise non-adjacent neighbors.
bool is_claw_free(const VertexWeightedGraph& g);

int min_degree(const VertexWeightedGraph& g);

// w(v) plus the weights of v's neighbors.
Weight closed_neighborhood_weight(const VertexWeightedGraph& g, Vertex v);

// Copy of the weight vector with degree-1 vertices zeroed. Degree-1 vertices
// are leaves of every spanning tree, so zeroing never changes internal weight.
std::vector<Weight> degree_one_zeroed_weights(const VertexWeightedGraph& g);

} // namespace maxwist
