#include "maxwist/generators.hpp"

#include <algorithm>
#include <cmath>

#include "maxwist/errors.hpp"

namespace maxwist {

std::uint64_t Rng::below(std::uint64_t bound) {
    if (bound == 0)
        raise(ErrorCode::InvalidN, "rng bound 0");
    std::uint64_t threshold = -bound % bound; // 2^64 mod bound
    for (;;) {
        std::uint64_t r = next();
        if (r >= threshold)
            return r % bound;
    }
}

WeightScheme WeightScheme::parse(const std::string& text) {
    WeightScheme s;
    if (text == "unit") {
        s.kind = Kind::Unit;
        return s;
    }
    auto colon = text.find(':');
    std::string head = text.substr(0, colon);
    std::string arg = colon == std::string::npos ? "" : text.substr(colon + 1);
    if (head == "uniform") {
        s.kind = Kind::Uniform;
        try {
            s.max = std::stoll(arg);
        } catch (...) {
            raise(ErrorCode::ParseError, "weight scheme '" + text + "'");
        }
        if (s.max < 0)
            raise(ErrorCode::ParseError, "uniform max must be >= 0");
        return s;
    }
    if (head == "zero-one") {
        s.kind = Kind::ZeroOne;
        try {
            s.p = std::stod(arg);
        } catch (...) {
            raise(ErrorCode::ParseError, "weight scheme '" + text + "'");
        }
        if (!(s.p >= 0.0 && s.p <= 1.0))
            raise(ErrorCode::ParseError, "zero-one probability must be in [0,1]");
        return s;
    }
    raise(ErrorCode::ParseError, "weight scheme '" + text + "'");
}

std::string WeightScheme::to_string() const {
    switch (kind) {
    case Kind::Unit: return "unit";
    case Kind::Uniform: return "uniform:" + std::to_string(max);
    case Kind::ZeroOne: {
        std::string p_text = std::to_string(p);
        return "zero-one:" + p_text;
    }
    }
    return "unit";
}

VertexWeightedGraph gen_cubic_random(int n, std::uint64_t seed, int* retries_out) {
    if (n < 4 || n % 2 != 0)
        raise(ErrorCode::InvalidN, "cubic graphs need even n >= 4, got " + std::to_string(n));

    Rng rng(seed);
    std::vector<Vertex> stubs(static_cast<std::size_t>(n) * 3);
    const int max_attempts = 10000;
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        for (int v = 0; v < n; ++v)
            stubs[3 * v] = stubs[3 * v + 1] = stubs[3 * v + 2] = v;
        rng.shuffle(stubs);

        std::vector<Edge> edges;
        edges.reserve(stubs.size() / 2);
        bool ok = true;
        for (std::size_t i = 0; i < stubs.size(); i += 2) {
            Vertex u = stubs[i], v = stubs[i + 1];
            if (u == v) {
                ok = false;
                break;
            }
            edges.emplace_back(std::min(u, v), std::max(u, v));
        }
        if (ok) {
            std::sort(edges.begin(), edges.end());
            for (std::size_t i = 1; i < edges.size() && ok; ++i)
                ok = edges[i] != edges[i - 1];
        }
        if (ok) {
            // connectivity via union-find
            std::vector<int> p(n);
            for (int v = 0; v < n; ++v)
                p[v] = v;
            auto find = [&](int v) {
                while (p[v] != v)
                    v = p[v] = p[p[v]];
                return v;
            };
            int comps = n;
            for (const auto& [u, v] : edges) {
                int a = find(u), b = find(v);
                if (a != b) {
                    p[a] = b;
                    --comps;
                }
            }
            ok = comps == 1;
        }
        if (ok) {
            if (retries_out)
                *retries_out = attempt;
            return VertexWeightedGraph(n, std::vector<Weight>(n, 1), edges);
        }
    }
    raise(ErrorCode::InvariantViolation,
          "configuration model failed after " + std::to_string(max_attempts) + " attempts");
}

VertexWeightedGraph gen_line_graph(const VertexWeightedGraph& base, bool strict) {
    std::vector<Edge> base_edges = base.edges();
    const int ln = static_cast<int>(base_edges.size());
    if (ln == 0)
        raise(ErrorCode::InvalidN, "base graph has no edges");

    if (strict)
        for (const auto& [u, v] : base_edges)
            if (base.degree(u) + base.degree(v) - 2 < 3)
                raise(ErrorCode::ResultHasDegreeTwo,
                      "base edge (" + std::to_string(u) + "," + std::to_string(v) +
                          ") yields line-graph degree " +
                          std::to_string(base.degree(u) + base.degree(v) - 2));

    // Group line-graph vertices (= base edges) by base endpoint; any two
    // sharing an endpoint are adjacent.
    std::vector<std::vector<int>> at(base.vertex_count());
    for (int e = 0; e < ln; ++e) {
        at[base_edges[e].first].push_back(e);
        at[base_edges[e].second].push_back(e);
    }
    std::vector<Edge> ledges;
    for (const auto& bucket : at)
        for (std::size_t i = 0; i < bucket.size(); ++i)
            for (std::size_t j = i + 1; j < bucket.size(); ++j)
                ledges.emplace_back(bucket[i], bucket[j]);
    std::sort(ledges.begin(), ledges.end());
    ledges.erase(std::unique(ledges.begin(), ledges.end()), ledges.end());

    return VertexWeightedGraph(ln, std::vector<Weight>(ln, 1), ledges);
}

VertexWeightedGraph gen_named(const std::string& family, int n) {
    if (family == "complete") {
        if (n < 1)
            raise(ErrorCode::InvalidN, "complete graph needs n >= 1");
        std::vector<Edge> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                edges.emplace_back(u, v);
        return VertexWeightedGraph(n, std::vector<Weight>(n, 1), edges);
    }
    if (family == "prism") {
        std::vector<Edge> edges = {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5},
                                   {4, 5}, {0, 3}, {1, 4}, {2, 5}};
        return VertexWeightedGraph(6, std::vector<Weight>(6, 1), edges);
    }
    if (family == "k13") {
        std::vector<Edge> edges = {{0, 1}, {0, 2}, {0, 3}};
        return VertexWeightedGraph(4, std::vector<Weight>(4, 1), edges);
    }
    if (family == "petersen") {
        std::vector<Edge> edges;
        for (int i = 0; i < 5; ++i) {
            edges.emplace_back(i, (i + 1) % 5 == 0 ? 0 : i + 1); // outer cycle
            edges.emplace_back(i, i + 5);                        // spoke
            edges.emplace_back(i + 5, 5 + (i + 2) % 5);          // inner pentagram
        }
        for (auto& [u, v] : edges)
            if (u > v)
                std::swap(u, v);
        std::sort(edges.begin(), edges.end());
        edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
        return VertexWeightedGraph(10, std::vector<Weight>(10, 1), edges);
    }
    raise(ErrorCode::UnknownFamily, "'" + family + "'");
}

VertexWeightedGraph assign_weights(const VertexWeightedGraph& g, const WeightScheme& scheme,
                                   std::uint64_t seed) {
    const int n = g.vertex_count();
    std::vector<Weight> w(n, 1);
    switch (scheme.kind) {
    case WeightScheme::Kind::Unit:
        break;
    case WeightScheme::Kind::Uniform: {
        Rng rng(seed);
        for (int v = 0; v < n; ++v)
            w[v] = static_cast<Weight>(rng.below(static_cast<std::uint64_t>(scheme.max) + 1));
        break;
    }
    case WeightScheme::Kind::ZeroOne: {
        Rng rng(seed);
        // 53-bit draw against a fixed threshold keeps this reproducible.
        auto threshold = static_cast<std::uint64_t>(std::ldexp(scheme.p, 53));
        for (int v = 0; v < n; ++v)
            w[v] = (rng.next() >> 11) < threshold ? 1 : 0;
        break;
    }
    }
    return VertexWeightedGraph(n, std::move(w), g.edges());
}

VertexWeightedGraph generate(const GenSpec& spec) {
    // Weights draw from a stream decoupled from the topology stream.
    std::uint64_t weight_seed = spec.seed ^ 0x517cc1b727220a95ULL;
    if (spec.family == "cubic-random")
        return assign_weights(gen_cubic_random(spec.n, spec.seed), spec.scheme, weight_seed);
    if (spec.family == "line-graph-of-cubic-random")
        return assign_weights(gen_line_graph(gen_cubic_random(spec.n, spec.seed)), spec.scheme,
                              weight_seed);
    if (spec.family == "complete" || spec.family == "prism" || spec.family == "k13" ||
        spec.family == "petersen")
        return assign_weights(gen_named(spec.family, spec.n), spec.scheme, weight_seed);
    raise(ErrorCode::UnknownFamily, "'" + spec.family + "'");
}

} // namespace maxwist
