#include "maxwist/graph_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <vector>

#include "maxwist/errors.hpp"

namespace maxwist {

namespace {

// Strips comments/blank lines and returns the remaining whitespace tokens.
std::vector<std::string> data_tokens(std::istream& in) {
    std::vector<std::string> tokens;
    std::string line;
    while (std::getline(in, line)) {
        std::size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#')
            continue;
        std::istringstream ls(line);
        std::string tok;
        while (ls >> tok)
            tokens.push_back(tok);
    }
    return tokens;
}

long long parse_int(const std::string& tok, const char* what) {
    try {
        std::size_t pos = 0;
        long long value = std::stoll(tok, &pos);
        if (pos != tok.size())
            raise(ErrorCode::ParseError, std::string(what) + " '" + tok + "'");
        return value;
    } catch (const Error&) {
        throw;
    } catch (...) {
        raise(ErrorCode::ParseError, std::string(what) + " '" + tok + "'");
    }
}

// Fixed-point weight token -> (integer digits value, fractional digit count).
std::pair<long long, int> parse_weight_token(const std::string& tok) {
    long long digits = 0;
    int frac = -1;
    bool neg = false;
    std::size_t i = 0;
    if (i < tok.size() && (tok[i] == '-' || tok[i] == '+')) {
        neg = tok[i] == '-';
        ++i;
    }
    bool any = false;
    for (; i < tok.size(); ++i) {
        char ch = tok[i];
        if (ch == '.') {
            if (frac >= 0)
                raise(ErrorCode::ParseError, "weight '" + tok + "'");
            frac = 0;
            continue;
        }
        if (!std::isdigit(static_cast<unsigned char>(ch)))
            raise(ErrorCode::ParseError, "weight '" + tok + "'");
        if (digits > (9000000000000000000LL - 9) / 10)
            raise(ErrorCode::ParseError, "weight too large '" + tok + "'");
        digits = digits * 10 + (ch - '0');
        if (frac >= 0)
            ++frac;
        any = true;
    }
    if (!any)
        raise(ErrorCode::ParseError, "weight '" + tok + "'");
    return {neg ? -digits : digits, frac < 0 ? 0 : frac};
}

} // namespace

VertexWeightedGraph read_graph(std::istream& in, long long* scale_out) {
    std::vector<std::string> tokens = data_tokens(in);
    std::size_t at = 0;
    auto next = [&](const char* what) -> const std::string& {
        if (at >= tokens.size())
            raise(ErrorCode::ParseError, std::string("missing ") + what);
        return tokens[at++];
    };

    long long n = parse_int(next("vertex count"), "vertex count");
    long long m = parse_int(next("edge count"), "edge count");
    if (n <= 0 || m < 0)
        raise(ErrorCode::ParseError, "bad header " + std::to_string(n) + " " + std::to_string(m));

    std::vector<std::pair<long long, int>> raw;
    raw.reserve(static_cast<std::size_t>(n));
    int max_frac = 0;
    for (long long v = 0; v < n; ++v) {
        raw.push_back(parse_weight_token(next("weight")));
        max_frac = std::max(max_frac, raw.back().second);
    }
    long long scale = 1;
    for (int i = 0; i < max_frac; ++i)
        scale *= 10;
    std::vector<Weight> weights;
    weights.reserve(raw.size());
    for (const auto& [digits, frac] : raw) {
        long long mul = 1;
        for (int i = frac; i < max_frac; ++i)
            mul *= 10;
        weights.push_back(digits * mul);
    }

    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (long long e = 0; e < m; ++e) {
        long long u = parse_int(next("edge endpoint"), "edge endpoint");
        long long v = parse_int(next("edge endpoint"), "edge endpoint");
        if (u >= v)
            raise(ErrorCode::ParseError,
                  "edge endpoints must satisfy u < v, got " + std::to_string(u) + " " +
                      std::to_string(v));
        edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    if (at != tokens.size())
        raise(ErrorCode::ParseError, "trailing data '" + tokens[at] + "'");

    if (scale_out)
        *scale_out = scale;
    return VertexWeightedGraph(static_cast<int>(n), std::move(weights), edges);
}

VertexWeightedGraph read_graph_file(const std::string& path, long long* scale_out) {
    std::ifstream in(path);
    if (!in)
        raise(ErrorCode::ParseError, "cannot open '" + path + "'");
    return read_graph(in, scale_out);
}

void write_graph(std::ostream& out, const VertexWeightedGraph& g) {
    out << g.vertex_count() << " " << g.edge_count() << "\n";
    for (int v = 0; v < g.vertex_count(); ++v)
        out << (v ? " " : "") << g.weight(v);
    out << "\n";
    for (const auto& [u, v] : g.edges())
        out << u << " " << v << "\n";
}

std::string write_graph_string(const VertexWeightedGraph& g) {
    std::ostringstream out;
    write_graph(out, g);
    return out.str();
}

} // namespace maxwist
