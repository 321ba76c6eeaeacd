#pragma once

#include <cstdint>
#include <initializer_list>
#include <vector>

#include "ksys/graph.hpp"
#include "ksys/oracle.hpp"
#include "oracles/brute_force.hpp"

namespace ksys::testing {

inline EdgeList edge_list(const PolytopeGraph& g) {
  EdgeList out;
  for (const Edge& e : g.edges()) out.emplace_back(e.u, e.v);
  return out;
}

/// Every edge points to its larger endpoint.
inline Orientation low_to_high(const PolytopeGraph& g) {
  return Orientation(g.fingerprint(), std::vector<std::uint8_t>(g.num_edges(), 1));
}

inline Orientation from_mask(const PolytopeGraph& g, std::uint64_t mask) {
  std::vector<std::uint8_t> heads(g.num_edges());
  for (std::size_t e = 0; e < heads.size(); ++e) heads[e] = (mask >> e) & 1;
  return Orientation(g.fingerprint(), std::move(heads));
}

inline std::vector<Rational> weights(std::initializer_list<int> values) {
  std::vector<Rational> out;
  for (int v : values) out.emplace_back(v);
  return out;
}

/// Cube(3) oriented toward the nearer of the antipodal corners 000 and 111,
/// ties between the two middle layers broken by vertex id. Acyclic with two
/// global sinks.
inline Orientation two_sink_cube(const PolytopeGraph& cube3) {
  std::vector<std::int64_t> value(8);
  for (Vertex v = 0; v < 8; ++v) {
    int layer = __builtin_popcount(v);
    int dist = std::min(layer, 3 - layer);
    value[v] = -10 * dist + v;
  }
  return orient_toward_larger(cube3, value);
}

inline std::vector<std::vector<int>> to_vectors(const std::vector<VertexSet>& sets) {
  return std::vector<std::vector<int>>(sets.begin(), sets.end());
}

}  // namespace ksys::testing
