#pragma once

#include <iosfwd>
#include <map>
#include <vector>

#include "maxwist/graph.hpp"
#include "maxwist/trace.hpp"

namespace maxwist {

// Per-vertex charge accounting in half-units: vertex v starts holding its
// own 2*w(v) half-units. Parcels keep their source identity while moving
// between holders; a released parcel sits in the per-source free pool.
// Every operation only relocates half-units, so the per-source totals (and
// the grand total 2*w(V)) are conserved by construction and re-checked by
// the trace audit.
class ChargeLedger {
public:
    enum class Fraction { Half, Whole };
    static constexpr int kFree = -1;

    ChargeLedger(const std::vector<Weight>& weights, Trace* trace = nullptr);

    long long halves_of(Vertex source, Fraction f) const {
        return f == Fraction::Half ? weights_[source] : 2 * weights_[source];
    }

    // Half-units of `source` sitting at `holder` (kFree for the free pool).
    long long amount_at(Vertex source, int holder) const;
    // Total half-units held by a vertex.
    long long held(Vertex holder) const { return held_total_[holder]; }
    // Free half-units of `source`: the released pool plus whatever still
    // sits untransferred at the source vertex itself.
    long long free_of(Vertex source) const;

    // Core primitive; everything else goes through it. Raises
    // InsufficientCharge when `from` lacks the amount.
    void move(Vertex source, long long halves, int from, int to);

    void transfer(Vertex source, Fraction f, int from, int to);
    void release(Vertex source, Fraction f, int from);
    // Releases every half-unit of `source` held by `from` (may be zero).
    void release_all_of(Vertex source, int from);

    // Claims `halves` free half-units of `source` for `to`, drawing from the
    // released pool first and then from the source's own untransferred
    // charge. Raises InsufficientCharge when not enough is free.
    void claim_free(Vertex source, long long halves, Vertex to);

    // Moves the listed (source, fraction) parcels out of `from`, giving
    // `first` exactly `first_halves` and `second` all the rest. Raises
    // InsufficientCharge when the pool cannot satisfy both needs.
    void split_transfer_to_two(const std::vector<std::pair<Vertex, Fraction>>& parts, int from,
                               Vertex first, long long first_halves, Vertex second,
                               long long second_min_halves);

    long long total_halves() const;
    // One line per parcel: "<source> <halves> <location>", sorted.
    void dump(std::ostream& out) const;

private:
    std::vector<Weight> weights_;
    // holdings_[source]: holder (kFree included) -> half-units
    std::vector<std::map<int, long long>> holdings_;
    std::vector<long long> held_total_;
    Trace* trace_;
};

} // namespace maxwist
