#include "maxwist/clawfree.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>

#include "maxwist/charge.hpp"
#include "maxwist/errors.hpp"
#include "maxwist/oracle.hpp"

namespace maxwist {

namespace {

using Fraction = ChargeLedger::Fraction;

Edge norm_edge(Vertex u, Vertex v) { return {std::min(u, v), std::max(u, v)}; }

std::string edge_text(Vertex u, Vertex v) {
    return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

// The unique child of x whose subtree contains a.
Vertex child_toward(const DfsTree& t, Vertex x, Vertex a) {
    for (Vertex c : t.children(x))
        if (t.is_ancestor(c, a))
            return c;
    raise(ErrorCode::InvariantViolation,
          "no child of " + std::to_string(x) + " leads to " + std::to_string(a));
}

bool strict_ancestor(const DfsTree& t, Vertex u, Vertex v) {
    return u != v && t.is_ancestor(u, v);
}

// Mutable copy of the tree plus the bookkeeping the rewiring stage needs:
// no edge may be removed or added twice, added edges must exist in the
// graph, and a degree-3 vertex over exactly two leaf chains ("deep") gets
// marked saturated the first time it loses an incident edge.
class Rewirer {
public:
    Rewirer(const VertexWeightedGraph& g, const DfsTree& t, const std::vector<char>& deep,
            Trace* trace)
        : g_(g), deep_(deep), trace_(trace), adj_(g.vertex_count()),
          saturated_(g.vertex_count(), 0) {
        for (Vertex v = 0; v < g.vertex_count(); ++v)
            if (t.parent[v] >= 0) {
                adj_[v].insert(t.parent[v]);
                adj_[t.parent[v]].insert(v);
            }
    }

    int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
    bool has(Vertex u, Vertex v) const { return adj_[u].count(v) > 0; }
    bool saturated(Vertex v) const { return saturated_[v] != 0; }
    const std::set<Vertex>& neighbors(Vertex v) const { return adj_[v]; }

    // `actor` is the leaf whose processing performs the edit; recorded when
    // the removal saturates a deep vertex.
    void remove_edge(Vertex u, Vertex v, Vertex actor) {
        Edge e = norm_edge(u, v);
        if (!has(u, v))
            raise(ErrorCode::InvariantViolation, "removing absent edge " + edge_text(u, v));
        if (!removed_.insert(e).second)
            raise(ErrorCode::InvariantViolation, "edge " + edge_text(u, v) + " removed twice");
        adj_[u].erase(v);
        adj_[v].erase(u);
        if (trace_)
            trace_->add(TraceEvent::Kind::RemoveEdge, {e.first, e.second});
        for (Vertex x : {u, v})
            if (deep_[x] && !saturated_[x]) {
                saturated_[x] = 1;
                if (trace_)
                    trace_->add(TraceEvent::Kind::Saturate, {x, actor});
            }
    }

    void add_edge(Vertex u, Vertex v) {
        Edge e = norm_edge(u, v);
        if (!g_.has_edge(u, v))
            raise(ErrorCode::InvariantViolation,
                  "added edge " + edge_text(u, v) + " is not in the graph");
        if (has(u, v))
            raise(ErrorCode::InvariantViolation, "adding present edge " + edge_text(u, v));
        if (!added_.insert(e).second)
            raise(ErrorCode::InvariantViolation, "edge " + edge_text(u, v) + " added twice");
        adj_[u].insert(v);
        adj_[v].insert(u);
        if (trace_)
            trace_->add(TraceEvent::Kind::AddEdge, {e.first, e.second});
    }

    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        for (Vertex v = 0; v < static_cast<Vertex>(adj_.size()); ++v)
            for (Vertex u : adj_[v])
                if (v < u)
                    out.push_back({v, u});
        std::sort(out.begin(), out.end());
        return out;
    }

private:
    const VertexWeightedGraph& g_;
    const std::vector<char>& deep_;
    Trace* trace_;
    std::vector<std::set<Vertex>> adj_;
    std::vector<char> saturated_;
    std::set<Edge> removed_, added_;
};

// Whole pipeline state shared by the stages below.
struct Pipeline {
    const VertexWeightedGraph& g;
    Trace* trace;
    std::vector<Weight> zw;
    Weight ztotal = 0;
    DfsTree t;
    std::vector<LeafAnnotation> leaves;
    std::vector<int> ann_index;           // vertex -> index into `leaves`, -1 otherwise
    std::vector<std::vector<std::pair<Vertex, int>>> holders_of; // below-child -> (leaf, 1|2)
    std::vector<char> deep;
    ChargeLedger ledger;
    Rewirer rew;
    std::vector<Vertex> bad;
    std::vector<ClawfreeRun::IntroducedEdge> candidates;
    std::map<Edge, Vertex> introducer_of;   // normalized candidate edge -> introducing leaf
    std::map<Edge, std::string> case_label; // normalized candidate edge -> case it went through

    Pipeline(const VertexWeightedGraph& graph, std::vector<Weight> zeroed, DfsTree tree,
             std::vector<char> deep_flags, Trace* tr)
        : g(graph), trace(tr), zw(std::move(zeroed)), t(std::move(tree)),
          ann_index(graph.vertex_count(), -1), holders_of(graph.vertex_count()),
          deep(std::move(deep_flags)), ledger(zw, tr), rew(graph, t, deep, tr) {
        for (Weight w : zw)
            ztotal += w;
    }

    void emit(TraceEvent::Kind kind, std::initializer_list<long long> args,
              std::string label = {}) {
        if (trace)
            trace->add(kind, args, std::move(label));
    }

    const LeafAnnotation& annotation(Vertex leaf) const {
        if (ann_index[leaf] < 0)
            raise(ErrorCode::InvariantViolation,
                  "vertex " + std::to_string(leaf) + " has no leaf annotation");
        return leaves[ann_index[leaf]];
    }

    void annotate();
    void check_leaf_adjacency();
    void distribute();
    void classify();
    void build_candidates();
    void process_candidates();
    void process_one(const LeafAnnotation& an);
    void handle_bad_leaves();
    ClawfreeRun finish();
};

void Pipeline::annotate() {
    std::vector<std::vector<Vertex>> uppers(g.vertex_count());
    for (const auto& [lower, upper] : t.backward_edges)
        uppers[lower].push_back(upper);

    for (Vertex v : t.order) {
        if (!t.is_leaf(v))
            continue;
        auto& ups = uppers[v];
        if (ups.size() < 2) {
            // Only a degree-1 vertex can miss a second backward edge, and
            // those carry zero weight by construction.
            if (zw[v] != 0 || g.degree(v) > 1)
                raise(ErrorCode::InvariantViolation,
                      "leaf " + std::to_string(v) + " of degree " + std::to_string(g.degree(v)) +
                          " has fewer than two backward edges");
            continue;
        }
        std::sort(ups.begin(), ups.end(),
                  [&](Vertex x, Vertex y) { return t.disc[x] > t.disc[y]; });

        LeafAnnotation an;
        an.leaf = v;
        an.upper1 = ups[0];
        an.upper2 = ups[1];
        an.below1 = child_toward(t, an.upper1, v);
        an.below2 = child_toward(t, an.upper2, v);
        Vertex x = t.parent[v];
        while (x != t.root && t.tree_degree(x) != 3)
            x = t.parent[x];
        an.fork = t.tree_degree(x) == 3 ? x : t.root;
        an.fork_child = child_toward(t, an.fork, v);
        an.short_branch = t.parent[v] == an.fork;

        // The greedy branching choice guarantees both path children outweigh
        // the leaf; everything downstream leans on this.
        for (Vertex b : {an.below1, an.below2})
            if (zw[b] < zw[v])
                raise(ErrorCode::InvariantViolation,
                      "leaf " + std::to_string(v) + " outweighs path vertex " + std::to_string(b));

        ann_index[v] = static_cast<int>(leaves.size());
        holders_of[an.below1].push_back({v, 1});
        holders_of[an.below2].push_back({v, 2});
        emit(TraceEvent::Kind::Leaf,
             {v, an.upper1, an.below1, an.upper2, an.below2, an.fork, an.fork_child},
             an.short_branch ? "short" : "long");
        leaves.push_back(an);
    }
}

void Pipeline::check_leaf_adjacency() {
    std::vector<int> adjacent_leaves(g.vertex_count(), 0);
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (t.is_leaf(v))
            for (Vertex u : g.neighbors(v))
                ++adjacent_leaves[u];
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (!t.is_leaf(v) && adjacent_leaves[v] > 2)
            raise(ErrorCode::InvariantViolation, "vertex " + std::to_string(v) + " touches " +
                                                     std::to_string(adjacent_leaves[v]) +
                                                     " leaves in the graph");
}

void Pipeline::distribute() {
    // Key the distribution by the upper endpoints: each internal vertex
    // anchors the deepest-two backward edges of at most two leaves, and the
    // charge of its child on the respective path moves down to those leaves,
    // whole when the vertex anchors one leaf and in halves when two.
    std::vector<std::vector<std::pair<Vertex, int>>> anchored(g.vertex_count());
    for (const auto& an : leaves) {
        anchored[an.upper1].push_back({an.leaf, 1});
        anchored[an.upper2].push_back({an.leaf, 2});
    }
    for (Vertex q = 0; q < g.vertex_count(); ++q) {
        const auto& claims = anchored[q];
        if (claims.empty())
            continue;
        if (claims.size() > 2)
            raise(ErrorCode::InvariantViolation, "vertex " + std::to_string(q) +
                                                     " anchors backward edges of " +
                                                     std::to_string(claims.size()) + " leaves");
        auto source_of = [&](const std::pair<Vertex, int>& c) {
            const LeafAnnotation& an = annotation(c.first);
            return c.second == 1 ? an.below1 : an.below2;
        };
        if (claims.size() == 1) {
            emit(TraceEvent::Kind::Rule1, {q, claims[0].first});
            Vertex src = source_of(claims[0]);
            ledger.transfer(src, Fraction::Whole, src, claims[0].first);
        } else {
            emit(TraceEvent::Kind::Rule2, {q, claims[0].first, claims[1].first});
            for (const auto& c : claims) {
                Vertex src = source_of(c);
                ledger.transfer(src, Fraction::Half, src, c.first);
            }
        }
    }
}

void Pipeline::classify() {
    for (const auto& an : leaves) {
        // After distribution every annotated leaf holds its own charge plus
        // at least half of each path child, i.e. twice its own weight.
        if (ledger.held(an.leaf) < 4 * zw[an.leaf])
            raise(ErrorCode::InvariantViolation,
                  "leaf " + std::to_string(an.leaf) + " holds " +
                      std::to_string(ledger.held(an.leaf)) + "/2 after distribution");
    }

    Weight interim = 0;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (t.tree_degree(v) >= 2)
            interim += zw[v];
    int n = g.vertex_count();
    emit(TraceEvent::Kind::Interim, {interim, ztotal});
    if (!ratio_at_least(interim, ztotal, make_rational(n - 2, 2 * n)))
        raise(ErrorCode::InvariantViolation,
              "interim internal weight " + std::to_string(interim) + " below (n-2)/2n of " +
                  std::to_string(ztotal));

    for (const auto& an : leaves) {
        if (ledger.held(an.leaf) >= 5 * zw[an.leaf]) {
            emit(TraceEvent::Kind::Good, {an.leaf});
            continue;
        }
        emit(TraceEvent::Kind::Bad, {an.leaf});
        // A short leaf cannot fall below target: every bad leaf's deepest
        // uppers sit strictly above its fork, and its second path child is
        // shared with another leaf.
        if (!strict_ancestor(t, an.upper1, an.fork) || !strict_ancestor(t, an.upper2, an.fork))
            raise(ErrorCode::InvariantViolation,
                  "bad leaf " + std::to_string(an.leaf) + " has an upper inside its own branch");
        bool shared = false;
        for (const auto& [other, which] : holders_of[an.below2])
            if (other != an.leaf)
                shared = true;
        if (!shared)
            raise(ErrorCode::InvariantViolation,
                  "bad leaf " + std::to_string(an.leaf) + " does not share its second path child");
        bad.push_back(an.leaf);
    }
}

void Pipeline::build_candidates() {
    for (const auto& an : leaves) {
        if (!strict_ancestor(t, an.upper1, an.fork) || !strict_ancestor(t, an.upper2, an.fork))
            continue;
        if (t.parent[an.upper1] != an.upper2)
            continue;
        Edge e = norm_edge(an.upper1, an.upper2);
        if (introducer_of.count(e))
            continue; // first leaf in discovery order keeps the edge
        introducer_of[e] = an.leaf;
        candidates.push_back({e, an.leaf});
    }
    for (const auto& c : candidates) {
        const LeafAnnotation& an = annotation(c.introducer);
        emit(TraceEvent::Kind::EEdge, {an.upper1, an.upper2, an.leaf});
    }
}

void Pipeline::process_one(const LeafAnnotation& an) {
    Vertex a = an.leaf;
    Edge key = norm_edge(an.upper1, an.upper2);
    long long target = 5 * zw[a];

    if (!rew.saturated(an.fork)) {
        if (an.short_branch) {
            case_label[key] = "1.1";
            emit(TraceEvent::Kind::Case, {a}, "1.1");
            rew.remove_edge(an.upper1, an.upper2, a);
            rew.remove_edge(a, an.fork, a);
            rew.add_edge(a, an.upper1);
            rew.add_edge(a, an.upper2);
            ledger.release_all_of(an.below1, a);
            ledger.release_all_of(an.below2, a);
            if (rew.degree(a) < 2)
                raise(ErrorCode::InvariantViolation,
                      "leaf " + std::to_string(a) + " still dangling after rewiring");
        } else {
            case_label[key] = "1.2";
            emit(TraceEvent::Kind::Case, {a}, "1.2");
            Vertex ap = t.parent[a];
            if (zw[ap] >= zw[a]) {
                ledger.claim_free(ap, 2 * zw[ap], a);
                ledger.release(an.below2, Fraction::Half, a);
                if (ledger.held(a) < target)
                    raise(ErrorCode::InvariantViolation,
                          "leaf " + std::to_string(a) + " short of target after its parent paid");
            } else {
                rew.remove_edge(a, ap, a);
                rew.remove_edge(an.upper1, an.upper2, a);
                rew.add_edge(a, an.upper1);
                rew.add_edge(a, an.upper2);
                ledger.move(a, 2 * zw[a], a, ap);
                ledger.move(an.below1, zw[an.below1], a, ap);
                ledger.release(an.below2, Fraction::Half, a);
                if (rew.degree(ap) != 1)
                    raise(ErrorCode::InvariantViolation,
                          "vertex " + std::to_string(ap) + " should be a leaf after rewiring");
                if (ledger.held(ap) < 5 * zw[ap])
                    raise(ErrorCode::InvariantViolation,
                          "new leaf " + std::to_string(ap) + " short of target");
            }
        }
        return;
    }

    if (t.parent[an.fork] == an.upper1) {
        // Saturated fork right below the deepest upper: the leaf must
        // already hold at least half the fork's charge from distribution;
        // top it up to the whole from the free pool. Exceptionally, no half
        // of the second path child is released here.
        case_label[key] = "2";
        emit(TraceEvent::Kind::Case, {a}, "2");
        if (an.below1 != an.fork)
            raise(ErrorCode::InvariantViolation,
                  "deepest upper of " + std::to_string(a) + " is not the fork's parent");
        long long have = ledger.amount_at(an.fork, a);
        if (have == zw[an.fork])
            ledger.claim_free(an.fork, zw[an.fork], a);
        else if (have != 2 * zw[an.fork])
            raise(ErrorCode::InvariantViolation,
                  "leaf " + std::to_string(a) + " holds neither half nor whole of its fork");
        if (ledger.held(a) < target)
            raise(ErrorCode::InvariantViolation,
                  "leaf " + std::to_string(a) + " short of target in the exceptional case");
        return;
    }

    // Saturated fork, deepest upper elsewhere: the fork's whole charge must
    // be free (released when the fork got saturated, or never moved).
    if (ledger.free_of(an.fork) != 2 * zw[an.fork])
        raise(ErrorCode::InvariantViolation,
              "charge of saturated fork " + std::to_string(an.fork) + " is not free");
    if (an.short_branch) {
        case_label[key] = "3.1";
        emit(TraceEvent::Kind::Case, {a}, "3.1");
        if (zw[an.fork] >= zw[a]) {
            ledger.claim_free(an.fork, 2 * zw[an.fork], a);
            ledger.release(an.below2, Fraction::Half, a);
            if (ledger.held(a) < target)
                raise(ErrorCode::InvariantViolation,
                      "leaf " + std::to_string(a) + " short of target after claiming its fork");
        } else {
            rew.remove_edge(a, an.fork, a);
            rew.remove_edge(an.upper1, an.upper2, a);
            rew.add_edge(a, an.upper1);
            rew.add_edge(a, an.upper2);
            ledger.move(a, 2 * zw[a], a, an.fork);
            ledger.move(an.below1, zw[an.below1], a, an.fork);
            ledger.release(an.below2, Fraction::Half, a);
            ledger.claim_free(an.fork, ledger.amount_at(an.fork, ChargeLedger::kFree), an.fork);
            if (rew.degree(an.fork) != 1)
                raise(ErrorCode::InvariantViolation, "vertex " + std::to_string(an.fork) +
                                                         " should be a leaf after rewiring");
            if (ledger.held(an.fork) < 5 * zw[an.fork])
                raise(ErrorCode::InvariantViolation,
                      "new leaf " + std::to_string(an.fork) + " short of target");
        }
    } else {
        case_label[key] = "3.2";
        emit(TraceEvent::Kind::Case, {a}, "3.2");
        Vertex fc = an.fork_child;
        if (zw[an.fork] + zw[fc] >= zw[a]) {
            ledger.claim_free(an.fork, 2 * zw[an.fork], a);
            ledger.claim_free(fc, 2 * zw[fc], a);
            ledger.release(an.below2, Fraction::Half, a);
            if (ledger.held(a) < target)
                raise(ErrorCode::InvariantViolation,
                      "leaf " + std::to_string(a) + " short of target after claiming the fork pair");
        } else {
            rew.remove_edge(an.fork, fc, a);
            rew.remove_edge(an.upper1, an.upper2, a);
            rew.add_edge(a, an.upper1);
            rew.add_edge(a, an.upper2);
            ledger.claim_free(an.fork, ledger.amount_at(an.fork, ChargeLedger::kFree), an.fork);
            ledger.split_transfer_to_two({{a, Fraction::Whole}, {an.below1, Fraction::Half}}, a,
                                         an.fork, 3 * zw[an.fork], fc, 3 * zw[fc]);
            ledger.release(an.below2, Fraction::Half, a);
            for (Vertex nl : {an.fork, fc}) {
                if (rew.degree(nl) != 1)
                    raise(ErrorCode::InvariantViolation, "vertex " + std::to_string(nl) +
                                                             " should be a leaf after rewiring");
                if (ledger.held(nl) < 5 * zw[nl])
                    raise(ErrorCode::InvariantViolation,
                          "new leaf " + std::to_string(nl) + " short of target");
            }
        }
    }
}

void Pipeline::process_candidates() {
    for (const auto& c : candidates)
        process_one(annotation(c.introducer));
}

void Pipeline::handle_bad_leaves() {
    std::set<Vertex> introducers;
    for (const auto& c : candidates)
        introducers.insert(c.introducer);

    for (Vertex a : bad) {
        if (introducers.count(a))
            continue; // settled while processing its own candidate edge
        if (rew.degree(a) != 1)
            continue; // a later stage already made it internal
        const LeafAnnotation& an = annotation(a);
        if (ledger.held(a) >= 5 * zw[a])
            continue;
        Vertex shared = an.below2;

        auto claim_released_half = [&](const char* label) {
            auto it = case_label.find(norm_edge(shared, an.upper2));
            if (it == case_label.end() || it->second == "2")
                raise(ErrorCode::InvariantViolation,
                      "no released half available for bad leaf " + std::to_string(a));
            emit(TraceEvent::Kind::BadCase, {a}, label);
            ledger.claim_free(shared, zw[shared], a);
        };

        if (g.has_edge(a, shared)) {
            // The shared child is itself a backward-edge target of the leaf,
            // so it must be the deepest one.
            if (an.upper1 != shared)
                raise(ErrorCode::InvariantViolation,
                      "bad leaf " + std::to_string(a) + " adjacent to " + std::to_string(shared) +
                          " which is not its deepest upper");
            claim_released_half("i");
        } else {
            std::vector<std::pair<Vertex, int>> witnesses;
            for (const auto& [b, j] : holders_of[shared])
                if (b != a && g.has_edge(b, shared))
                    witnesses.push_back({b, j});
            if (witnesses.size() != 1)
                raise(ErrorCode::InvariantViolation,
                      "bad leaf " + std::to_string(a) + " has " +
                          std::to_string(witnesses.size()) + " witnesses at " +
                          std::to_string(shared));
            auto [b, j] = witnesses[0];
            const LeafAnnotation& bn = annotation(b);
            if (j == 2) {
                if (bn.upper1 != shared)
                    raise(ErrorCode::InvariantViolation,
                          "witness " + std::to_string(b) + " adjacent to " +
                              std::to_string(shared) + " which is not its deepest upper");
                if (introducer_of.find(norm_edge(shared, an.upper2)) == introducer_of.end() ||
                    introducer_of[norm_edge(shared, an.upper2)] != b)
                    raise(ErrorCode::InvariantViolation,
                          "witness " + std::to_string(b) + " did not introduce the shared edge");
                claim_released_half("ii");
            } else {
                // The witness's deepest backward edge target is its own
                // parent, a branching vertex shared with this leaf's chain.
                if (t.parent[b] != shared || bn.fork != shared || !bn.short_branch)
                    raise(ErrorCode::InvariantViolation,
                          "witness " + std::to_string(b) + " is not parented by " +
                              std::to_string(shared));
                if (deep[shared])
                    raise(ErrorCode::InvariantViolation,
                          "vertex " + std::to_string(shared) + " unexpectedly deep");
                Edge be = norm_edge(bn.upper1, bn.upper2);
                auto it = introducer_of.find(be);
                if (it != introducer_of.end()) {
                    if (it->second != b || case_label[be] != "1.1")
                        raise(ErrorCode::InvariantViolation,
                              "witness edge of " + std::to_string(b) +
                                  " processed out of expected shape");
                    emit(TraceEvent::Kind::BadCase, {a}, "iii");
                    ledger.claim_free(shared, zw[shared], a);
                } else {
                    if (!rew.has(bn.upper1, shared) || !rew.has(b, shared) ||
                        rew.degree(shared) != 3)
                        raise(ErrorCode::InvariantViolation,
                              "rewire step for bad leaf " + std::to_string(a) +
                                  " found an unexpected tree shape");
                    emit(TraceEvent::Kind::BadCase, {a}, "iv");
                    rew.remove_edge(shared, bn.upper1, b);
                    rew.add_edge(b, bn.upper1);
                    ledger.move(shared, zw[shared], b, a);
                    if (rew.degree(b) != 2)
                        raise(ErrorCode::InvariantViolation,
                              "witness " + std::to_string(b) + " should be internal now");
                }
            }
        }
        if (ledger.held(a) < 5 * zw[a])
            raise(ErrorCode::InvariantViolation,
                  "bad leaf " + std::to_string(a) + " still short of target");
    }
}

ClawfreeRun Pipeline::finish() {
    int n = g.vertex_count();

    // Spanning check of the rewired tree.
    std::vector<Edge> edges = rew.edges();
    if (static_cast<int>(edges.size()) != n - 1)
        raise(ErrorCode::InvariantViolation,
              "rewired tree has " + std::to_string(edges.size()) + " edges");
    std::vector<char> seen(n, 0);
    std::vector<Vertex> stack{t.root};
    seen[t.root] = 1;
    int reached = 1;
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        for (Vertex u : rew.neighbors(v))
            if (!seen[u]) {
                seen[u] = 1;
                ++reached;
                stack.push_back(u);
            }
    }
    if (reached != n)
        raise(ErrorCode::InvariantViolation, "rewired tree is not spanning");

    // Every non-root leaf made its target; the root's charge never moved.
    for (Vertex v = 0; v < n; ++v)
        if (v != t.root && rew.degree(v) == 1 && ledger.held(v) < 5 * zw[v])
            raise(ErrorCode::InvariantViolation,
                  "final leaf " + std::to_string(v) + " holds " + std::to_string(ledger.held(v)) +
                      "/2, needs " + std::to_string(5 * zw[v]) + "/2");
    if (ledger.amount_at(t.root, t.root) != 2 * zw[t.root] ||
        ledger.held(t.root) != 2 * zw[t.root])
        raise(ErrorCode::InvariantViolation, "root charge was touched");
    if (ledger.total_halves() != 2 * ztotal)
        raise(ErrorCode::InvariantViolation, "charge was created or destroyed");

    Weight internal_zeroed = 0;
    std::vector<int> deg(n, 0);
    for (const auto& [u, v] : edges) {
        ++deg[u];
        ++deg[v];
    }
    for (Vertex v = 0; v < n; ++v)
        if (deg[v] >= 2)
            internal_zeroed += zw[v];
    emit(TraceEvent::Kind::Final, {internal_zeroed, ztotal});
    emit(TraceEvent::Kind::End, {});

    ClawfreeRun run;
    run.zeroed_weights = zw;
    run.tree = t;
    run.leaves = leaves;
    run.deep = deep;
    run.bad_leaves = bad;
    run.rewire_candidates = candidates;
    for (Vertex v = 0; v < n; ++v)
        if (t.tree_degree(v) >= 2)
            run.interim_internal += zw[v];
    run.final_edges = edges;
    run.solution =
        make_solution(g, edges, clawfree_guarantee(n), "clawfree", ztotal);
    // Degree-1 vertices can never be internal, so both weightings agree.
    if (run.solution.internal_weight != internal_zeroed)
        raise(ErrorCode::InvariantViolation, "internal weight differs between weightings");
    if (!ratio_at_least(internal_zeroed, ztotal, run.solution.guarantee))
        raise(ErrorCode::InvariantViolation,
              "internal weight " + std::to_string(internal_zeroed) + " below " +
                  to_string(run.solution.guarantee) + " of " + std::to_string(ztotal));
    return run;
}

} // namespace

ClawfreeRun run_clawfree_pipeline(const VertexWeightedGraph& g, Trace* trace) {
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) == 2)
            raise(ErrorCode::HasDegreeTwoVertex, "vertex " + std::to_string(v) + " has degree 2");
    if (!is_claw_free(g))
        raise(ErrorCode::NotClawFree, "graph contains an induced claw");

    std::vector<Weight> zw = degree_one_zeroed_weights(g);
    Vertex root = 0;
    for (Vertex v = 1; v < g.vertex_count(); ++v)
        if (zw[v] < zw[root])
            root = v;

    if (trace) {
        trace->add(TraceEvent::Kind::Graph, {g.vertex_count(), g.edge_count()});
        trace->add(TraceEvent::Kind::Root, {root});
    }

    DfsTree t = run_greedy_dfs(g, root, BranchCriterion::MaxWeight, zw);
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (t.child_count(v) > 2)
            raise(ErrorCode::InvariantViolation,
                  "DFS tree vertex " + std::to_string(v) + " has three children");
    if (trace) {
        for (Vertex v : t.order)
            if (v != t.root)
                trace->add(TraceEvent::Kind::TreeEdge, {t.parent[v], v});
        for (const auto& [lower, upper] : t.backward_edges)
            trace->add(TraceEvent::Kind::BackwardEdge, {lower, upper});
    }

    // Deep vertices: tree degree 3 with exactly two leaves underneath.
    int n = g.vertex_count();
    std::vector<int> leaf_count(n, 0);
    for (int i = n - 1; i >= 0; --i) {
        Vertex v = t.order[i];
        if (t.is_leaf(v))
            leaf_count[v] = 1;
        for (Vertex c : t.children(v))
            leaf_count[v] += leaf_count[c];
    }
    std::vector<char> deep(n, 0);
    for (Vertex v = 0; v < n; ++v)
        deep[v] = t.tree_degree(v) == 3 && leaf_count[v] == 2;

    Pipeline p(g, std::move(zw), std::move(t), std::move(deep), trace);
    p.annotate();
    p.check_leaf_adjacency();
    p.distribute();
    p.classify();
    p.build_candidates();
    p.process_candidates();
    p.handle_bad_leaves();
    return p.finish();
}

SpanningTreeSolution solve_clawfree(const VertexWeightedGraph& g, Trace* trace) {
    return run_clawfree_pipeline(g, trace).solution;
}

SpanningTreeSolution approx_clawfree(const VertexWeightedGraph& g, const Rational& epsilon,
                                     int oracle_cap) {
    if (compare(epsilon, {0, 1}) <= 0 || compare(epsilon, {3, 5}) >= 0)
        raise(ErrorCode::InvalidEpsilon, to_string(epsilon) + " outside (0, 3/5)");
    if (!is_claw_free(g))
        raise(ErrorCode::NotClawFree, "epsilon scheme needs a claw-free graph");
    // n < 1/eps  <=>  n * num < den
    if (static_cast<__int128>(g.vertex_count()) * epsilon.num < epsilon.den)
        return solve_exact(g, oracle_cap);
    return solve_clawfree(g);
}

} // namespace maxwist
