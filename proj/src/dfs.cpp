#include "maxwist/dfs.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <string>

#include "maxwist/bigalloc.hpp"
#include "maxwist/errors.hpp"

namespace maxwist {

std::vector<Edge> DfsTree::tree_edges() const {
    // Counting sort by the smaller endpoint; each bucket holds at most the
    // tree degree of that vertex, so the tail sorts are O(1) apiece.
    const int n = static_cast<int>(parent.size());
    std::vector<int> start(n + 1, 0);
    for (Vertex v = 0; v < n; ++v)
        if (parent[v] >= 0)
            ++start[std::min(v, parent[v]) + 1];
    for (int v = 0; v < n; ++v)
        start[v + 1] += start[v];
    std::vector<Edge> out(parent.size() - 1);
    std::vector<int> fill(start.begin(), start.end() - 1);
    for (Vertex v = 0; v < n; ++v)
        if (parent[v] >= 0) {
            Vertex a = std::min(v, parent[v]);
            out[fill[a]++] = {a, std::max(v, parent[v])};
        }
    for (Vertex v = 0; v < n; ++v)
        if (start[v + 1] - start[v] > 1)
            std::sort(out.begin() + start[v], out.begin() + start[v + 1]);
    return out;
}

namespace {

// Everything the candidate loop reads about a vertex, in one cache-line
// touch. The traversal is bound by dependent random loads into this array,
// so the layout is parameterized: when every weight fits in 32 bits and
// every degree in 15, the 8-byte form halves the array the loads target.
template <typename WeightT, typename CountT>
struct HotVertexT {
    using weight_type = WeightT;
    using count_type = CountT;
    WeightT w;
    CountT udeg; // unvisited neighbors, maintained incrementally
    std::uint8_t visited;
    std::uint8_t on_stack; // ancestors of the current vertex, live
};

using HotNarrow = HotVertexT<std::int32_t, std::int16_t>;
using HotWide = HotVertexT<Weight, int>;
static_assert(sizeof(HotNarrow) == 8 && sizeof(HotWide) == 16);

// The tree fields a push or pop writes, packed so each event touches one
// line. Stores retire asynchronously; only the loads above stall the walk.
// Unpacked into the DfsTree's per-field vectors once the traversal is done.
struct NodeRecord {
    Vertex parent = -1;
    int disc = -1;
    int tin = 0;
    int tout = 0;
};

// True when candidate a beats candidate b. Exact comparisons; ties go to the
// smaller vertex index.
bool better_ratio(Vertex a, Weight wa, int ua, Vertex b, Weight wb, int ub) {
    if (ua == 0 || ub == 0) {
        if (ua == 0 && ub == 0)
            return a < b;
        return ua == 0;
    }
    __int128 lhs = static_cast<__int128>(wa) * ub;
    __int128 rhs = static_cast<__int128>(wb) * ua;
    if (lhs != rhs)
        return lhs > rhs;
    return a < b;
}

bool better_weight(Vertex a, Weight wa, Vertex b, Weight wb) {
    if (wa != wb)
        return wa > wb;
    return a < b;
}

// Each stack frame carries its slice of the candidate arena: the neighbors
// still unvisited when the vertex was pushed. Vertices only become visited,
// never the reverse, so the slice is a superset of the unvisited neighbors
// at any later examination; ones found visited are swap-compacted out so a
// long-lived frame stops re-probing them. The winner is the same whatever
// order candidates are met in, because the comparison is a total order.
struct Frame {
    Vertex v;
    int cand_begin;
    int cand_end;
};

template <typename Hot>
void run_traversal(const VertexWeightedGraph& g, std::span<const Weight> weights, Vertex root,
                   bool ratio, DfsTree& t,
                   std::vector<NodeRecord, BigAllocator<NodeRecord>>& node) {
    const int n = g.vertex_count();
    std::vector<Hot, BigAllocator<Hot>> hot(n);
    for (Vertex v = 0; v < n; ++v)
        hot[v] = {static_cast<typename Hot::weight_type>(weights[v]),
                  static_cast<typename Hot::count_type>(g.degree(v)), 0, 0};

    std::vector<Vertex, BigAllocator<Vertex>> cand;
    cand.reserve(g.edge_count()); // at most one endpoint of an edge is pushed
                                  // while the other is still unvisited

    // Visiting a vertex scans its neighbors once: decrement their unvisited
    // counts, gather the still-unvisited ones as the new frame's candidates,
    // and record the non-tree edges closing at this (deeper) end. That keeps
    // every later candidate query to a single hot-array read instead of a
    // rescan of the vertex's adjacency. In an undirected DFS every non-tree
    // edge must close to an ancestor, i.e. a vertex still on the stack;
    // checked here while its line is loaded anyway.
    auto mark_visited = [&](Vertex v, Vertex parent) {
        hot[v].visited = 1;
        hot[v].on_stack = 1;
        for (Vertex z : g.neighbors(v)) {
            --hot[z].udeg;
            if (!hot[z].visited) {
                cand.push_back(z);
                g.prefetch_neighbor_index(z);
            } else if (z != parent) {
                if (!hot[z].on_stack)
                    raise(ErrorCode::InvariantViolation,
                          "non-tree edge (" + std::to_string(v) + "," + std::to_string(z) +
                              ") does not join an ancestor");
                t.backward_edges.emplace_back(v, z);
            }
        }
    };

    std::vector<Frame> stack;
    stack.reserve(n);
    int clock = 0;
    mark_visited(root, -1);
    node[root] = {-1, 0, clock++, 0};
    t.order.push_back(root);
    stack.push_back({root, 0, static_cast<int>(cand.size())});

    while (!stack.empty()) {
        Frame& f = stack.back();
        Vertex best = -1;
        Weight best_w = 0;
        int best_u = 0;
        for (int i = f.cand_begin; i < f.cand_end;) {
            Vertex y = cand[i];
            const Hot& h = hot[y];
            if (h.visited) {
                cand[i] = cand[--f.cand_end];
                continue;
            }
            bool wins = best < 0 || (ratio ? better_ratio(y, h.w, h.udeg, best, best_w, best_u)
                                           : better_weight(y, h.w, best, best_w));
            if (wins) {
                best = y;
                best_w = h.w;
                best_u = h.udeg;
                g.prefetch_neighbor_row(y); // likely marked next; overlap its row fetch
            }
            ++i;
        }
        if (best < 0) {
            Vertex x = f.v;
            hot[x].on_stack = 0;
            node[x].tout = clock++;
            stack.pop_back();
            continue;
        }
        node[best] = {f.v, static_cast<int>(t.order.size()), clock++, 0};
        int begin = static_cast<int>(cand.size());
        mark_visited(best, f.v);
        t.order.push_back(best);
        stack.push_back({best, begin, static_cast<int>(cand.size())}); // invalidates f
    }
}

} // namespace

DfsTree run_greedy_dfs(const VertexWeightedGraph& g, Vertex root, BranchCriterion criterion) {
    return run_greedy_dfs(g, root, criterion, g.weights());
}

DfsTree run_greedy_dfs(const VertexWeightedGraph& g, Vertex root, BranchCriterion criterion,
                       std::span<const Weight> weights) {
    const int n = g.vertex_count();
    if (root < 0 || root >= n)
        raise(ErrorCode::IndexOutOfRange, "root " + std::to_string(root));
    if (static_cast<int>(weights.size()) != n)
        raise(ErrorCode::IndexOutOfRange, "weight vector size");

    DfsTree t;
    t.root = root;
    t.order.reserve(n);
    std::vector<NodeRecord, BigAllocator<NodeRecord>> node(n);

    bool narrow = true;
    for (Vertex v = 0; v < n && narrow; ++v)
        narrow = weights[v] >= std::numeric_limits<std::int32_t>::min() &&
                 weights[v] <= std::numeric_limits<std::int32_t>::max() &&
                 g.degree(v) <= std::numeric_limits<std::int16_t>::max();

    const bool ratio = criterion == BranchCriterion::RatioWeightOverUnvisited;
    if (narrow)
        run_traversal<HotNarrow>(g, weights, root, ratio, t, node);
    else
        run_traversal<HotWide>(g, weights, root, ratio, t, node);

    if (static_cast<int>(t.order.size()) != n)
        raise(ErrorCode::Disconnected, "dfs reached " + std::to_string(t.order.size()) +
                                           " of " + std::to_string(n) + " vertices");

    t.parent.resize(n);
    t.disc.resize(n);
    t.tin.resize(n);
    t.tout.resize(n);
    for (Vertex v = 0; v < n; ++v) {
        t.parent[v] = node[v].parent;
        t.disc[v] = node[v].disc;
        t.tin[v] = node[v].tin;
        t.tout[v] = node[v].tout;
    }

    // children CSR, in visit order
    t.child_start.assign(n + 1, 0);
    {
        std::vector<int, BigAllocator<int>> cnt(n, 0);
        for (Vertex v = 0; v < n; ++v)
            if (node[v].parent >= 0)
                ++cnt[node[v].parent];
        for (Vertex v = 0; v < n; ++v)
            t.child_start[v + 1] = t.child_start[v] + cnt[v];
        std::vector<int, BigAllocator<int>> flat(n - 1);
        std::vector<int, BigAllocator<int>> fill(t.child_start.begin(),
                                                 t.child_start.end() - 1);
        for (Vertex v : t.order)
            if (node[v].parent >= 0)
                flat[fill[node[v].parent]++] = v;
        t.child_flat.assign(flat.begin(), flat.end());
    }

    return t;
}

int unvisited_count_at(const DfsTree& t, const VertexWeightedGraph& g, Vertex x, Vertex probe) {
    int u = 0;
    for (Vertex y : g.neighbors(x))
        u += t.disc[y] > t.disc[probe];
    return u;
}

} // namespace maxwist
