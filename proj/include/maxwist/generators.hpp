#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "maxwist/graph.hpp"

namespace maxwist {

// Fixed-algorithm 64-bit PRNG (splitmix64). The standard library engines are
// portable but its distributions are not; this keeps corpora byte-identical
// across platforms.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Unbiased integer in [0, bound), bound >= 1. Rejection sampling.
    std::uint64_t below(std::uint64_t bound);

    template <class T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i)
            std::swap(v[i - 1], v[below(i)]);
    }

private:
    std::uint64_t state_;
};

struct WeightScheme {
    enum class Kind { Unit, Uniform, ZeroOne };
    Kind kind = Kind::Unit;
    Weight max = 1;    // Uniform: values drawn from [0, max]
    double p = 0.5;    // ZeroOne: weight 1 with probability p, else 0

    static WeightScheme parse(const std::string& text); // "unit" | "uniform:100" | "zero-one:0.5"
    std::string to_string() const;
};

struct GenSpec {
    std::string family; // cubic-random | line-graph-of-cubic-random | complete | prism | k13 | petersen
    int n = 0;          // vertex count (base-graph n for line graphs; ignored by fixed families)
    WeightScheme scheme;
    std::uint64_t seed = 0;
};

// Connected simple 3-regular graph via the configuration model with
// rejection; unit weights. n must be even and >= 4.
VertexWeightedGraph gen_cubic_random(int n, std::uint64_t seed, int* retries_out = nullptr);

// Line graph of `base`: one vertex per base edge (in sorted edge order), an
// edge where base edges share an endpoint. Unit weights. In strict mode a
// result vertex of degree < 3 is an error.
VertexWeightedGraph gen_line_graph(const VertexWeightedGraph& base, bool strict = true);

// complete:<n>, prism, k13, petersen. Unit weights.
VertexWeightedGraph gen_named(const std::string& family, int n = 0);

VertexWeightedGraph assign_weights(const VertexWeightedGraph& g, const WeightScheme& scheme,
                                   std::uint64_t seed);

// Dispatch on spec.family; same spec always yields the same graph.
VertexWeightedGraph generate(const GenSpec& spec);

} // namespace maxwist
