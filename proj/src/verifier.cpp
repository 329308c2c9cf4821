#include "maxwist/verifier.hpp"

#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>

#include "maxwist/errors.hpp"

namespace maxwist {

namespace {

struct DisjointSets {
    std::vector<int> parent;
    explicit DisjointSets(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b)
            return false;
        parent[a] = b;
        return true;
    }
};

std::string bool_text(bool b) { return b ? "true" : "false"; }

} // namespace

BoundKind bound_kind_for_tag(const std::string& tag) {
    if (tag == "cubic")
        return BoundKind::Cubic;
    if (tag == "clawfree")
        return BoundKind::Clawfree;
    return BoundKind::None;
}

BoundKind parse_bound_kind(const std::string& text) {
    if (text == "cubic")
        return BoundKind::Cubic;
    if (text == "clawfree")
        return BoundKind::Clawfree;
    if (text == "none")
        return BoundKind::None;
    raise(ErrorCode::ParseError, "unknown bound kind '" + text + "'");
}

std::string VerificationReport::render() const {
    std::ostringstream out;
    out << "spanning " << bool_text(is_spanning) << "\n";
    out << "internal " << internal_weight << "\n";
    out << "total " << total_weight << "\n";
    out << "zeroed_total " << zeroed_total_weight << "\n";
    out << "bound " << to_string(bound) << "\n";
    out << "bound_satisfied " << bool_text(bound_satisfied) << "\n";
    out << "violations " << violations.size() << "\n";
    for (const auto& v : violations)
        out << "violation " << v << "\n";
    return out.str();
}

VerificationReport verify_tree(const VertexWeightedGraph& g, const std::vector<Edge>& edges,
                               BoundKind kind) {
    VerificationReport r;
    int n = g.vertex_count();
    r.total_weight = g.total_weight();
    std::vector<Weight> zw = degree_one_zeroed_weights(g);
    for (Weight w : zw)
        r.zeroed_total_weight += w;

    bool structural = true;
    if (static_cast<int>(edges.size()) != n - 1) {
        r.violations.push_back("edge-count: " + std::to_string(edges.size()) + " edges for " +
                               std::to_string(n) + " vertices");
        structural = false;
    }
    std::set<Edge> seen;
    std::vector<int> deg(n, 0);
    DisjointSets dsu(n);
    int united = 0;
    for (const auto& [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n || u == v) {
            r.violations.push_back("edge-not-in-graph: (" + std::to_string(u) + "," +
                                   std::to_string(v) + ") out of range");
            structural = false;
            continue;
        }
        Edge e{std::min(u, v), std::max(u, v)};
        if (!seen.insert(e).second) {
            r.violations.push_back("duplicate-edge: (" + std::to_string(e.first) + "," +
                                   std::to_string(e.second) + ")");
            structural = false;
            continue;
        }
        if (!g.has_edge(u, v)) {
            r.violations.push_back("edge-not-in-graph: (" + std::to_string(u) + "," +
                                   std::to_string(v) + ")");
            structural = false;
            continue;
        }
        ++deg[u];
        ++deg[v];
        if (dsu.unite(u, v))
            ++united;
        else {
            r.violations.push_back("cycle: (" + std::to_string(u) + "," + std::to_string(v) +
                                   ") closes a cycle");
            structural = false;
        }
    }
    r.is_spanning = structural && united == n - 1;
    if (!r.is_spanning && structural)
        r.violations.push_back("not-spanning: " + std::to_string(n - 1 - united) +
                               " components unreached");

    for (Vertex v = 0; v < n; ++v)
        if (deg[v] >= 2)
            r.internal_weight += g.weight(v);

    switch (kind) {
    case BoundKind::Cubic:
        r.bound = cubic_guarantee(n);
        r.bound_satisfied = ratio_at_least(r.internal_weight, r.total_weight, r.bound);
        break;
    case BoundKind::Clawfree:
        r.bound = clawfree_guarantee(n);
        r.bound_satisfied = ratio_at_least(r.internal_weight, r.zeroed_total_weight, r.bound);
        break;
    case BoundKind::None:
        r.bound = {0, 1};
        r.bound_satisfied = true;
        break;
    }
    return r;
}

VerificationReport verify_solution(const VertexWeightedGraph& g, const SpanningTreeSolution& sol,
                                   BoundKind kind) {
    VerificationReport r = verify_tree(g, sol.tree_edges, kind);
    if (sol.internal_weight != r.internal_weight)
        r.violations.push_back("internal-mismatch: claimed " + std::to_string(sol.internal_weight) +
                               ", recomputed " + std::to_string(r.internal_weight));
    if (sol.total_weight != r.total_weight)
        r.violations.push_back("total-mismatch: claimed " + std::to_string(sol.total_weight) +
                               ", recomputed " + std::to_string(r.total_weight));
    if (kind != BoundKind::None) {
        if (compare(sol.guarantee, r.bound) != 0)
            r.violations.push_back("guarantee-mismatch: claimed " + to_string(sol.guarantee) +
                                   ", expected " + to_string(r.bound));
        Weight expected_total =
            kind == BoundKind::Cubic ? r.total_weight : r.zeroed_total_weight;
        if (sol.bound_total_weight != expected_total)
            r.violations.push_back("bound-total-mismatch: claimed " +
                                   std::to_string(sol.bound_total_weight) + ", expected " +
                                   std::to_string(expected_total));
    } else if (!ratio_at_least(r.internal_weight, sol.bound_total_weight, sol.guarantee)) {
        // A tag the verifier has no formula for still must honor its own claim.
        r.violations.push_back("claimed-bound: internal " + std::to_string(r.internal_weight) +
                               " below " + to_string(sol.guarantee) + " of " +
                               std::to_string(sol.bound_total_weight));
    }
    return r;
}

namespace {

// Trace replay with a mirror tree and a mirror charge ledger. Violations are
// collected, never thrown: the auditor's job is to report on hostile input.
class Auditor {
public:
    Auditor(const VertexWeightedGraph& g, const Trace& trace)
        : g_(g), trace_(trace), n_(g.vertex_count()), zw_(degree_one_zeroed_weights(g)),
          parent_(n_, -1), discovered_(n_, 0), child_count_(n_, 0), adj_(n_), amounts_(n_),
          held_total_(n_, 0) {
        for (Vertex v = 0; v < n_; ++v) {
            ztotal_ += zw_[v];
            if (zw_[v] > 0) {
                amounts_[v][v] = 2 * zw_[v];
                held_total_[v] = 2 * zw_[v];
            }
        }
    }

    VerificationReport run();

private:
    void fail(const std::string& label, const std::string& detail) {
        report_.violations.push_back(label + ": " + detail);
    }
    bool in_range(long long v) const { return v >= 0 && v < n_; }
    bool is_location(long long v) const { return v == kFreeLocation || in_range(v); }
    bool tree_ancestor(Vertex u, Vertex v) const {
        while (v != -1) {
            if (v == u)
                return true;
            v = parent_[v];
        }
        return false;
    }
    bool tree_has(Vertex u, Vertex v) const { return adj_[u].count(v) > 0; }

    void handle(const TraceEvent& e);
    void handle_tree_edge(const TraceEvent& e);
    void handle_backward_edge(const TraceEvent& e);
    void handle_move(const TraceEvent& e);
    void handle_remove(const TraceEvent& e);
    void handle_add(const TraceEvent& e);
    void final_checks(const TraceEvent& e);

    const VertexWeightedGraph& g_;
    const Trace& trace_;
    VerificationReport report_;
    int n_;
    std::vector<Weight> zw_;
    Weight ztotal_ = 0;

    bool have_graph_ = false, have_root_ = false, have_final_ = false, ended_ = false;
    Vertex root_ = -1;
    std::vector<Vertex> parent_;
    std::vector<char> discovered_;
    std::vector<int> child_count_;
    int discovered_count_ = 0;

    std::vector<std::set<Vertex>> adj_;
    std::set<Edge> removed_, added_;

    std::vector<std::map<long long, long long>> amounts_; // source -> location -> halves
    std::vector<long long> held_total_;
};

void Auditor::handle_tree_edge(const TraceEvent& e) {
    long long p = e.args[0], c = e.args[1];
    if (!in_range(p) || !in_range(c) || p == c) {
        fail("trace-shape", "tree edge (" + std::to_string(p) + "," + std::to_string(c) +
                                ") out of range");
        return;
    }
    if (!g_.has_edge(static_cast<Vertex>(p), static_cast<Vertex>(c))) {
        fail("edge-not-in-graph",
             "tree edge (" + std::to_string(p) + "," + std::to_string(c) + ")");
        return;
    }
    if (!discovered_[p]) {
        fail("trace-shape", "tree edge from undiscovered vertex " + std::to_string(p));
        return;
    }
    if (discovered_[c]) {
        fail("trace-shape", "vertex " + std::to_string(c) + " discovered twice");
        return;
    }
    discovered_[c] = 1;
    ++discovered_count_;
    parent_[c] = static_cast<Vertex>(p);
    if (++child_count_[p] > 2)
        fail("three-children", "vertex " + std::to_string(p) + " has a third child " +
                                   std::to_string(c));
    adj_[p].insert(static_cast<Vertex>(c));
    adj_[c].insert(static_cast<Vertex>(p));
}

void Auditor::handle_backward_edge(const TraceEvent& e) {
    long long l = e.args[0], u = e.args[1];
    if (!in_range(l) || !in_range(u) || l == u) {
        fail("trace-shape", "backward edge (" + std::to_string(l) + "," + std::to_string(u) +
                                ") out of range");
        return;
    }
    if (!g_.has_edge(static_cast<Vertex>(l), static_cast<Vertex>(u))) {
        fail("edge-not-in-graph",
             "backward edge (" + std::to_string(l) + "," + std::to_string(u) + ")");
        return;
    }
    if (!discovered_[l] || !discovered_[u]) {
        fail("trace-shape", "backward edge touches an undiscovered vertex");
        return;
    }
    if (!tree_ancestor(static_cast<Vertex>(u), static_cast<Vertex>(l)))
        fail("backward-edge-ancestry", "(" + std::to_string(l) + "," + std::to_string(u) +
                                           ") does not close an ancestor path");
}

void Auditor::handle_move(const TraceEvent& e) {
    long long src = e.args[0], halves = e.args[1], from = e.args[2], to = e.args[3];
    if (!in_range(src) || !is_location(from) || !is_location(to) || halves < 0 || from == to) {
        fail("trace-shape", "malformed move of vertex " + std::to_string(src));
        return;
    }
    auto& by_loc = amounts_[src];
    by_loc[from] -= halves;
    if (by_loc[from] < 0)
        fail("conservation", "location " + std::to_string(from) + " overdrawn by " +
                                 std::to_string(-by_loc[from]) + "/2 of vertex " +
                                 std::to_string(src));
    by_loc[to] += halves;
    if (from != kFreeLocation)
        held_total_[from] -= halves;
    if (to != kFreeLocation)
        held_total_[to] += halves;
}

void Auditor::handle_remove(const TraceEvent& e) {
    long long u = e.args[0], v = e.args[1];
    if (!in_range(u) || !in_range(v) || u == v) {
        fail("trace-shape", "malformed edge removal");
        return;
    }
    Edge key{static_cast<Vertex>(std::min(u, v)), static_cast<Vertex>(std::max(u, v))};
    if (removed_.count(key)) {
        fail("double-removal", "(" + std::to_string(key.first) + "," +
                                   std::to_string(key.second) + ") removed twice");
        return;
    }
    if (!tree_has(key.first, key.second)) {
        fail("tree-edge-missing", "(" + std::to_string(key.first) + "," +
                                      std::to_string(key.second) + ") not in the tree");
        return;
    }
    removed_.insert(key);
    adj_[key.first].erase(key.second);
    adj_[key.second].erase(key.first);
}

void Auditor::handle_add(const TraceEvent& e) {
    long long u = e.args[0], v = e.args[1];
    if (!in_range(u) || !in_range(v) || u == v) {
        fail("trace-shape", "malformed edge addition");
        return;
    }
    Edge key{static_cast<Vertex>(std::min(u, v)), static_cast<Vertex>(std::max(u, v))};
    if (!g_.has_edge(key.first, key.second)) {
        fail("edge-not-in-graph",
             "added edge (" + std::to_string(key.first) + "," + std::to_string(key.second) + ")");
        return;
    }
    if (tree_has(key.first, key.second) || added_.count(key)) {
        fail("double-add", "(" + std::to_string(key.first) + "," + std::to_string(key.second) +
                               ") added twice or already present");
        return;
    }
    added_.insert(key);
    adj_[key.first].insert(key.second);
    adj_[key.second].insert(key.first);
}

void Auditor::final_checks(const TraceEvent& e) {
    have_final_ = true;

    // The announced DFS tree must have reached every vertex.
    if (discovered_count_ != n_)
        fail("not-spanning", "DFS tree discovered " + std::to_string(discovered_count_) + " of " +
                                 std::to_string(n_) + " vertices");

    // No internal vertex of the announced tree touches three tree leaves.
    std::vector<int> leaf_neighbors(n_, 0);
    for (Vertex v = 0; v < n_; ++v)
        if (discovered_[v] && v != root_ && child_count_[v] == 0)
            for (Vertex u : g_.neighbors(v))
                ++leaf_neighbors[u];
    for (Vertex v = 0; v < n_; ++v)
        if (discovered_[v] && (v == root_ || child_count_[v] > 0) && leaf_neighbors[v] > 2)
            fail("leaf-adjacency", "internal vertex " + std::to_string(v) + " touches " +
                                       std::to_string(leaf_neighbors[v]) + " leaves");

    // The rewired tree spans.
    long long edge_total = 0;
    DisjointSets dsu(n_);
    int united = 0;
    for (Vertex v = 0; v < n_; ++v) {
        edge_total += static_cast<long long>(adj_[v].size());
        for (Vertex u : adj_[v])
            if (v < u && dsu.unite(v, u))
                ++united;
    }
    edge_total /= 2;
    report_.is_spanning = edge_total == n_ - 1 && united == n_ - 1;
    if (!report_.is_spanning)
        fail("not-spanning", "final tree has " + std::to_string(edge_total) + " edges, " +
                                 std::to_string(n_ - united) + " components");

    // Charge conservation and per-leaf targets.
    long long grand = 0;
    for (Vertex src = 0; src < n_; ++src)
        for (const auto& [loc, amt] : amounts_[src])
            grand += amt;
    if (grand != 2 * ztotal_)
        fail("conservation", "ledger holds " + std::to_string(grand) + "/2, expected " +
                                 std::to_string(2 * ztotal_) + "/2");
    if (have_root_) {
        auto it = amounts_[root_].find(root_);
        long long at_root = it == amounts_[root_].end() ? 0 : it->second;
        if (at_root != 2 * zw_[root_] || held_total_[root_] != 2 * zw_[root_])
            fail("root-charge", "root holdings were touched");
        for (Vertex v = 0; v < n_; ++v)
            if (v != root_ && adj_[v].size() == 1 && held_total_[v] < 5 * zw_[v])
                fail("leaf-charge", "leaf " + std::to_string(v) + " holds " +
                                        std::to_string(held_total_[v]) + "/2, needs " +
                                        std::to_string(5 * zw_[v]) + "/2");
    }

    // The final announcement must match the replayed state.
    Weight internal = 0;
    for (Vertex v = 0; v < n_; ++v)
        if (adj_[v].size() >= 2)
            internal += zw_[v];
    report_.internal_weight = internal;
    if (e.args[0] != internal || e.args[1] != ztotal_)
        fail("final-mismatch", "announced " + std::to_string(e.args[0]) + "/" +
                                   std::to_string(e.args[1]) + ", replayed " +
                                   std::to_string(internal) + "/" + std::to_string(ztotal_));
}

VerificationReport Auditor::run() {
    report_.total_weight = g_.total_weight();
    report_.zeroed_total_weight = ztotal_;
    report_.bound = clawfree_guarantee(n_);

    for (const TraceEvent& e : trace_.events) {
        if (ended_) {
            fail("trace-shape", "event after end");
            break;
        }
        handle(e);
    }
    if (!have_graph_)
        fail("graph-shape", "missing graph line");
    if (!have_root_)
        fail("graph-shape", "missing root line");
    if (!have_final_)
        fail("trace-shape", "missing final line");
    if (!ended_)
        fail("trace-shape", "missing end line");
    report_.bound_satisfied =
        ratio_at_least(report_.internal_weight, report_.zeroed_total_weight, report_.bound);
    return report_;
}

void Auditor::handle(const TraceEvent& e) {
    using K = TraceEvent::Kind;
    if (!have_graph_ && e.kind != K::Graph) {
        fail("graph-shape", "trace does not start with a graph line");
        have_graph_ = true; // report once, keep going
    }
    switch (e.kind) {
    case K::Graph:
        if (e.args[0] != n_ || e.args[1] != g_.edge_count())
            fail("graph-shape", "trace announces " + std::to_string(e.args[0]) + " vertices, " +
                                    std::to_string(e.args[1]) + " edges");
        have_graph_ = true;
        break;
    case K::Root:
        if (!in_range(e.args[0])) {
            fail("trace-shape", "root out of range");
            break;
        }
        if (have_root_) {
            fail("trace-shape", "second root line");
            break;
        }
        have_root_ = true;
        root_ = static_cast<Vertex>(e.args[0]);
        discovered_[root_] = 1;
        discovered_count_ = 1;
        break;
    case K::TreeEdge:
        if (have_root_)
            handle_tree_edge(e);
        else
            fail("trace-shape", "tree edge before root");
        break;
    case K::BackwardEdge:
        handle_backward_edge(e);
        break;
    case K::Move:
        handle_move(e);
        break;
    case K::RemoveEdge:
        handle_remove(e);
        break;
    case K::AddEdge:
        handle_add(e);
        break;
    case K::Final:
        final_checks(e);
        break;
    case K::End:
        ended_ = true;
        break;
    default:
        break; // narration events carry no audited state
    }
}

} // namespace

VerificationReport audit_invariants(const VertexWeightedGraph& g, const Trace& trace) {
    return Auditor(g, trace).run();
}

const std::vector<std::string>& audit_violation_labels() {
    static const std::vector<std::string> labels = {
        "graph-shape",       "trace-shape",       "edge-not-in-graph", "three-children",
        "backward-edge-ancestry", "leaf-adjacency", "double-removal",   "tree-edge-missing",
        "double-add",        "conservation",      "not-spanning",      "leaf-charge",
        "root-charge",       "final-mismatch",
    };
    return labels;
}

} // namespace maxwist
