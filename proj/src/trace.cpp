#include "maxwist/trace.hpp"

#include <istream>
#include <sstream>

#include "maxwist/errors.hpp"

namespace maxwist {

namespace {

struct KindInfo {
    TraceEvent::Kind kind;
    const char* name;
    int int_args;
    bool has_label;
};

// Table drives both renderer and parser; label position depends on the kind.
constexpr KindInfo kKinds[] = {
    {TraceEvent::Kind::Graph, "graph", 2, false},
    {TraceEvent::Kind::Root, "root", 1, false},
    {TraceEvent::Kind::TreeEdge, "tree_edge", 2, false},
    {TraceEvent::Kind::BackwardEdge, "backward_edge", 2, false},
    {TraceEvent::Kind::Leaf, "leaf", 7, true},
    {TraceEvent::Kind::Rule1, "rule1", 2, false},
    {TraceEvent::Kind::Rule2, "rule2", 3, false},
    {TraceEvent::Kind::Move, "move", 4, false},
    {TraceEvent::Kind::Interim, "interim", 2, false},
    {TraceEvent::Kind::Good, "good", 1, false},
    {TraceEvent::Kind::Bad, "bad", 1, false},
    {TraceEvent::Kind::EEdge, "eedge", 3, false},
    {TraceEvent::Kind::Case, "case", 1, true},
    {TraceEvent::Kind::RemoveEdge, "remove_edge", 2, false},
    {TraceEvent::Kind::AddEdge, "add_edge", 2, false},
    {TraceEvent::Kind::Saturate, "saturate", 2, false},
    {TraceEvent::Kind::BadCase, "badcase", 1, true},
    {TraceEvent::Kind::Final, "final", 2, false},
    {TraceEvent::Kind::End, "end", 0, false},
};

const KindInfo& info_for(TraceEvent::Kind kind) {
    for (const auto& k : kKinds)
        if (k.kind == kind)
            return k;
    raise(ErrorCode::ParseError, "unknown trace event kind");
}

const KindInfo* info_for_name(const std::string& name) {
    for (const auto& k : kKinds)
        if (name == k.name)
            return &k;
    return nullptr;
}

std::string location_text(long long loc) {
    return loc == kFreeLocation ? "free" : std::to_string(loc);
}

long long parse_location(const std::string& tok) {
    if (tok == "free")
        return kFreeLocation;
    try {
        return std::stoll(tok);
    } catch (...) {
        raise(ErrorCode::ParseError, "bad trace location '" + tok + "'");
    }
}

} // namespace

std::string render_event(const TraceEvent& e) {
    const KindInfo& info = info_for(e.kind);
    std::ostringstream out;
    out << info.name;
    if (e.kind == TraceEvent::Kind::Case || e.kind == TraceEvent::Kind::BadCase) {
        out << " " << e.label;
        for (long long a : e.args)
            out << " " << a;
        return out.str();
    }
    if (e.kind == TraceEvent::Kind::Move) {
        out << " " << e.args[0] << " " << e.args[1] << " " << location_text(e.args[2]) << " "
            << location_text(e.args[3]);
        return out.str();
    }
    for (long long a : e.args)
        out << " " << a;
    if (info.has_label)
        out << " " << e.label;
    return out.str();
}

std::string Trace::render() const {
    std::ostringstream out;
    for (const auto& e : events)
        out << render_event(e) << "\n";
    return out.str();
}

Trace Trace::parse(std::istream& in) {
    Trace t;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string head;
        if (!(ls >> head))
            continue;
        const KindInfo* info = info_for_name(head);
        if (!info)
            raise(ErrorCode::ParseError,
                  "trace line " + std::to_string(line_no) + ": unknown event '" + head + "'");
        TraceEvent e;
        e.kind = info->kind;
        std::vector<std::string> toks;
        std::string tok;
        while (ls >> tok)
            toks.push_back(tok);

        std::size_t expected = static_cast<std::size_t>(info->int_args) + (info->has_label ? 1 : 0);
        if (toks.size() != expected)
            raise(ErrorCode::ParseError, "trace line " + std::to_string(line_no) + ": expected " +
                                             std::to_string(expected) + " fields");
        std::size_t at = 0;
        // case/badcase carry the label first, leaf carries it last
        if (info->has_label && info->int_args == 1 &&
            (e.kind == TraceEvent::Kind::Case || e.kind == TraceEvent::Kind::BadCase))
            e.label = toks[at++];
        for (int i = 0; i < info->int_args; ++i) {
            if (e.kind == TraceEvent::Kind::Move && i >= 2) {
                e.args.push_back(parse_location(toks[at++]));
                continue;
            }
            try {
                e.args.push_back(std::stoll(toks[at]));
            } catch (...) {
                raise(ErrorCode::ParseError,
                      "trace line " + std::to_string(line_no) + ": bad integer '" + toks[at] + "'");
            }
            ++at;
        }
        if (info->has_label && e.label.empty())
            e.label = toks[at++];
        t.events.push_back(std::move(e));
    }
    return t;
}

Trace Trace::parse_string(const std::string& text) {
    std::istringstream in(text);
    return parse(in);
}

} // namespace maxwist
