#include "maxwist/oracle.hpp"

#include <algorithm>
#include <string>

#include "maxwist/errors.hpp"

namespace maxwist {

namespace {

struct Searcher {
    const VertexWeightedGraph& g;
    int n;
    std::vector<Edge> edges;
    Weight total;

    std::vector<int> comp;      // component label per vertex
    std::vector<int> deg_inc;   // degree among included edges
    std::vector<int> avail;     // incident edges not yet decided
    std::vector<Edge> selected; // included edges, index order (= lex order)

    Weight best_value = -1;
    std::vector<Edge> best_tree;
    long long evaluated = 0;

    explicit Searcher(const VertexWeightedGraph& graph)
        : g(graph), n(graph.vertex_count()), edges(graph.edges()), total(graph.total_weight()) {
        comp.resize(n);
        for (int v = 0; v < n; ++v)
            comp[v] = v;
        deg_inc.assign(n, 0);
        avail.assign(n, 0);
        for (int v = 0; v < n; ++v)
            avail[v] = g.degree(v);
    }

    Weight upper_bound() const {
        Weight forced = 0;
        int forced_count = 0;
        Weight pad1 = -1, pad2 = -1; // two smallest weights among possible leaves
        for (int v = 0; v < n; ++v) {
            if (deg_inc[v] + avail[v] <= 1) {
                forced += g.weight(v);
                ++forced_count;
            } else if (deg_inc[v] <= 1) {
                Weight w = g.weight(v);
                if (pad1 < 0 || w < pad1) {
                    pad2 = pad1;
                    pad1 = w;
                } else if (pad2 < 0 || w < pad2) {
                    pad2 = w;
                }
            }
        }
        Weight ub = total - forced;
        if (forced_count == 0) {
            if (pad1 >= 0)
                ub -= pad1;
            if (pad2 >= 0)
                ub -= pad2;
        } else if (forced_count == 1 && pad1 >= 0) {
            ub -= pad1;
        }
        return ub;
    }

    // Included edges plus all undecided edges from `idx` on must still span.
    bool can_still_connect(std::size_t idx) const {
        std::vector<int> p(n);
        for (int v = 0; v < n; ++v)
            p[v] = v;
        auto find = [&](int v) {
            while (p[v] != v)
                v = p[v] = p[p[v]];
            return v;
        };
        int comps = n;
        auto join = [&](int a, int b) {
            a = find(a);
            b = find(b);
            if (a != b) {
                p[a] = b;
                --comps;
            }
        };
        for (const auto& [u, v] : selected)
            join(u, v);
        for (std::size_t i = idx; i < edges.size() && comps > 1; ++i)
            join(edges[i].first, edges[i].second);
        return comps == 1;
    }

    void evaluate_candidate() {
        ++evaluated;
        Weight internal = 0;
        for (int v = 0; v < n; ++v)
            if (deg_inc[v] >= 2)
                internal += g.weight(v);
        if (internal > best_value ||
            (internal == best_value && selected < best_tree)) {
            best_value = internal;
            best_tree = selected;
        }
    }

    void search(std::size_t idx, int included) {
        if (included == n - 1) {
            evaluate_candidate();
            return;
        }
        if (idx >= edges.size())
            return;
        if (included + static_cast<int>(edges.size() - idx) < n - 1)
            return;
        if (best_value >= 0 && upper_bound() < best_value)
            return; // strict: ties are still explored so the lex-min optimum survives

        auto [u, v] = edges[idx];
        --avail[u];
        --avail[v];

        if (comp[u] != comp[v]) {
            // include
            int from = comp[u], to = comp[v];
            std::vector<int> relabeled;
            for (int x = 0; x < n; ++x)
                if (comp[x] == from) {
                    comp[x] = to;
                    relabeled.push_back(x);
                }
            ++deg_inc[u];
            ++deg_inc[v];
            selected.push_back(edges[idx]);
            search(idx + 1, included + 1);
            selected.pop_back();
            --deg_inc[u];
            --deg_inc[v];
            for (int x : relabeled)
                comp[x] = from;
        }

        // exclude
        if (can_still_connect(idx + 1))
            search(idx + 1, included);

        ++avail[u];
        ++avail[v];
    }
};

} // namespace

OracleResult optimal_internal_spanning_tree(const VertexWeightedGraph& g, int cap) {
    const int n = g.vertex_count();
    if (n > cap)
        raise(ErrorCode::ExactSolveTooLarge,
              std::to_string(n) + " vertices exceeds cap " + std::to_string(cap));

    Searcher s(g);
    s.search(0, 0);
    if (s.best_value < 0)
        raise(ErrorCode::InvariantViolation, "no spanning tree found on a connected graph");

    // Every tree on n >= 2 vertices has at least two leaves.
    if (n >= 2) {
        std::vector<Weight> w = g.weights();
        std::sort(w.begin(), w.end());
        if (s.best_value > g.total_weight() - w[0] - w[1])
            raise(ErrorCode::InvariantViolation, "optimum exceeds the two-leaf upper bound");
    }

    OracleResult r;
    r.best_tree = std::move(s.best_tree);
    r.opt_internal_weight = s.best_value;
    r.trees_evaluated = s.evaluated;
    return r;
}

SpanningTreeSolution solve_exact(const VertexWeightedGraph& g, int cap) {
    OracleResult r = optimal_internal_spanning_tree(g, cap);
    Rational realized = g.total_weight() > 0
                            ? make_rational(r.opt_internal_weight, g.total_weight())
                            : Rational{0, 1};
    return make_solution(g, std::move(r.best_tree), realized, "exact", g.total_weight());
}

} // namespace maxwist
