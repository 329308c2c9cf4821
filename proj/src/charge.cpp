#include "maxwist/charge.hpp"

#include <ostream>
#include <string>

#include "maxwist/errors.hpp"

namespace maxwist {

namespace {

std::string loc_text(int loc) {
    return loc == ChargeLedger::kFree ? "free" : std::to_string(loc);
}

} // namespace

ChargeLedger::ChargeLedger(const std::vector<Weight>& weights, Trace* trace)
    : weights_(weights), holdings_(weights.size()), held_total_(weights.size(), 0),
      trace_(trace) {
    for (Vertex v = 0; v < static_cast<Vertex>(weights_.size()); ++v) {
        if (weights_[v] < 0)
            raise(ErrorCode::NegativeWeight, "vertex " + std::to_string(v));
        if (weights_[v] > 0) {
            holdings_[v][v] = 2 * weights_[v];
            held_total_[v] = 2 * weights_[v];
        }
    }
}

long long ChargeLedger::amount_at(Vertex source, int holder) const {
    const auto& by_holder = holdings_[source];
    auto it = by_holder.find(holder);
    return it == by_holder.end() ? 0 : it->second;
}

long long ChargeLedger::free_of(Vertex source) const {
    return amount_at(source, kFree) + amount_at(source, source);
}

void ChargeLedger::move(Vertex source, long long halves, int from, int to) {
    if (halves == 0)
        return;
    if (halves < 0)
        raise(ErrorCode::InsufficientCharge, "negative move");
    if (from == to)
        raise(ErrorCode::InvariantViolation, "move from a location to itself");
    auto& by_holder = holdings_[source];
    auto it = by_holder.find(from);
    long long have = it == by_holder.end() ? 0 : it->second;
    if (have < halves)
        raise(ErrorCode::InsufficientCharge,
              loc_text(from) + " holds " + std::to_string(have) + "/2 of vertex " +
                  std::to_string(source) + ", needs " + std::to_string(halves) + "/2");
    if (have == halves)
        by_holder.erase(it);
    else
        it->second -= halves;
    by_holder[to] += halves;
    if (from != kFree)
        held_total_[from] -= halves;
    if (to != kFree)
        held_total_[to] += halves;
    if (trace_)
        trace_->add(TraceEvent::Kind::Move, {source, halves, from, to});
}

void ChargeLedger::transfer(Vertex source, Fraction f, int from, int to) {
    move(source, halves_of(source, f), from, to);
}

void ChargeLedger::release(Vertex source, Fraction f, int from) {
    move(source, halves_of(source, f), from, kFree);
}

void ChargeLedger::release_all_of(Vertex source, int from) {
    move(source, amount_at(source, from), from, kFree);
}

void ChargeLedger::claim_free(Vertex source, long long halves, Vertex to) {
    long long from_pool = std::min(halves, amount_at(source, kFree));
    long long from_self = halves - from_pool;
    if (from_self > 0 && amount_at(source, source) < from_self)
        raise(ErrorCode::InsufficientCharge,
              "vertex " + std::to_string(source) + " has only " +
                  std::to_string(free_of(source)) + "/2 free, needs " + std::to_string(halves) +
                  "/2");
    move(source, from_pool, kFree, to);
    if (to != source)
        move(source, from_self, source, to);
}

void ChargeLedger::split_transfer_to_two(const std::vector<std::pair<Vertex, Fraction>>& parts,
                                         int from, Vertex first, long long first_halves,
                                         Vertex second, long long second_min_halves) {
    long long available = 0;
    for (const auto& [source, fraction] : parts) {
        long long amt = halves_of(source, fraction);
        if (amount_at(source, from) < amt)
            raise(ErrorCode::InsufficientCharge,
                  loc_text(from) + " lacks the listed parcel of vertex " + std::to_string(source));
        available += amt;
    }
    if (available < first_halves + second_min_halves)
        raise(ErrorCode::InsufficientCharge,
              "split needs " + std::to_string(first_halves + second_min_halves) + "/2, has " +
                  std::to_string(available) + "/2");
    long long need = first_halves;
    for (const auto& [source, fraction] : parts) {
        long long amt = halves_of(source, fraction);
        long long to_first = std::min(need, amt);
        need -= to_first;
        move(source, to_first, from, first);
        move(source, amt - to_first, from, second);
    }
}

long long ChargeLedger::total_halves() const {
    long long sum = 0;
    for (const auto& by_holder : holdings_)
        for (const auto& [loc, amt] : by_holder)
            sum += amt;
    return sum;
}

void ChargeLedger::dump(std::ostream& out) const {
    for (Vertex source = 0; source < static_cast<Vertex>(holdings_.size()); ++source)
        for (const auto& [loc, amt] : holdings_[source])
            out << source << " " << amt << " " << loc_text(loc) << "\n";
}

} // namespace maxwist
