#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace maxwist {

// Flat event log of a claw-free run. Serializes to one line per event so a
// run can be audited offline; parse(render(t)) == t.
//
//   graph <n> <m>
//   root <r>
//   tree_edge <parent> <child>
//   backward_edge <lower> <upper>
//   leaf <a> <a1> <a1c> <a2> <a2c> <star> <starc> <short|long>
//   rule1 <q> <leaf>
//   rule2 <q> <leafA> <leafB>
//   move <source> <halves> <from> <to>     (location "free" or a vertex)
//   interim <internal> <ztotal>
//   good <leaf> / bad <leaf>
//   eedge <u> <v> <introducer>
//   case <label> <leaf>
//   remove_edge <u> <v>
//   add_edge <u> <v>
//   saturate <v> <leaf>
//   badcase <label> <leaf>
//   final <internal> <ztotal>
//   end
struct TraceEvent {
    enum class Kind {
        Graph, Root, TreeEdge, BackwardEdge, Leaf, Rule1, Rule2, Move, Interim,
        Good, Bad, EEdge, Case, RemoveEdge, AddEdge, Saturate, BadCase, Final, End,
    };
    Kind kind;
    std::vector<long long> args;
    std::string label;
};

// Location encoding inside move events.
inline constexpr long long kFreeLocation = -1;

struct Trace {
    std::vector<TraceEvent> events;

    void add(TraceEvent::Kind kind, std::initializer_list<long long> args,
             std::string label = {}) {
        events.push_back({kind, std::vector<long long>(args), std::move(label)});
    }

    std::string render() const;
    static Trace parse(std::istream& in);
    static Trace parse_string(const std::string& text);
};

std::string render_event(const TraceEvent& e);

} // namespace maxwist
