#pragma once

#include <iosfwd>
#include <string>

#include "maxwist/graph.hpp"

namespace maxwist {

// Text format:
//   # comment and blank lines are ignored
//   <n> <m>
//   w0 w1 ... w(n-1)
//   u v            (m lines, 0 <= u < v < n)
//
// Weights may be written as fixed-point decimals; if any weight has a
// fractional part, all weights are scaled by 10^(max fractional digits).
// The multiplier applied is reported through scale_out when given.
VertexWeightedGraph read_graph(std::istream& in, long long* scale_out = nullptr);
VertexWeightedGraph read_graph_file(const std::string& path, long long* scale_out = nullptr);

// Canonical form: integer weights, single spaces, edges sorted with u < v.
// Writing then re-reading reproduces the graph and the exact bytes.
void write_graph(std::ostream& out, const VertexWeightedGraph& g);
std::string write_graph_string(const VertexWeightedGraph& g);

} // namespace maxwist
