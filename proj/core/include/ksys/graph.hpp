#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace ksys {

/// Dense vertex id in 0..n-1.
using Vertex = int;

/// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<Vertex>;

/// Unordered edge stored canonically with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Abstract vertex-edge graph of a (claimed) simple d-polytope.
///
/// Construction goes through validate_graph(), which enforces that the graph
/// is d-regular, connected and free of loops and parallel edges. Nothing here
/// asserts that the graph is actually polytopal; that question is out of reach
/// from the graph alone.
class PolytopeGraph {
 public:
  int dim() const noexcept { return d_; }
  int num_vertices() const noexcept { return static_cast<int>(adjacency_.size()); }
  std::size_t num_edges() const noexcept { return edges_.size(); }

  /// Canonical edge list, sorted lexicographically; position is the edge index.
  std::span<const Edge> edges() const noexcept { return edges_; }
  const Edge& edge(std::size_t e) const { return edges_.at(e); }

  /// Sorted neighbor list of v.
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }
  /// Edge indices parallel to neighbors(v).
  std::span<const std::size_t> incident_edges(Vertex v) const { return incident_.at(v); }

  bool adjacent(Vertex a, Vertex b) const;
  std::optional<std::size_t> find_edge(Vertex a, Vertex b) const;

  /// Position of b inside neighbors(a), if adjacent.
  std::optional<int> neighbor_position(Vertex a, Vertex b) const;

  /// 16 hex digit FNV-1a hash of (d, n, sorted edge list).
  const std::string& fingerprint() const noexcept { return fingerprint_; }

  friend bool operator==(const PolytopeGraph& a, const PolytopeGraph& b) {
    return a.d_ == b.d_ && a.edges_ == b.edges_ && a.adjacency_.size() == b.adjacency_.size();
  }

 private:
  friend PolytopeGraph validate_graph(int d, int n, std::vector<Edge> edge_list);

  int d_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<std::vector<std::size_t>> incident_;
  std::string fingerprint_;
};

/// Builds a PolytopeGraph from a raw edge list (pairs may come in either
/// order). Throws Error with NotRegular, Disconnected, DuplicateEdge, SelfLoop
/// or VertexOutOfRange.
PolytopeGraph validate_graph(int d, int n, std::vector<Edge> edge_list);

std::string graph_fingerprint(int d, int n, std::span<const Edge> sorted_edges);

/// Direction assignment for every canonical edge of one graph. heads[e] == 0
/// means edge e = {u, v} points into u, heads[e] == 1 means it points into v.
/// Cyclic orientations are representable on purpose.
class Orientation {
 public:
  Orientation() = default;
  Orientation(std::string graph_fingerprint, std::vector<std::uint8_t> heads);

  const std::string& graph_fingerprint() const noexcept { return fingerprint_; }
  std::span<const std::uint8_t> heads() const noexcept { return heads_; }
  std::size_t size() const noexcept { return heads_.size(); }

  Vertex head(const PolytopeGraph& g, std::size_t e) const;
  Vertex tail(const PolytopeGraph& g, std::size_t e) const;

  /// Returns a copy with edge e reversed.
  Orientation flipped(std::size_t e) const;

  friend bool operator==(const Orientation&, const Orientation&) = default;
  friend auto operator<=>(const Orientation&, const Orientation&) = default;

 private:
  std::string fingerprint_;
  std::vector<std::uint8_t> heads_;
};

/// Throws FingerprintMismatch unless o was built for g.
void check_binding(const PolytopeGraph& g, const Orientation& o);

/// Orients every edge toward the endpoint with the larger value. Values must
/// be pairwise distinct on adjacent vertices.
Orientation orient_toward_larger(const PolytopeGraph& g, std::span<const std::int64_t> values);

struct TopologicalResult {
  /// Vertex order with every edge pointing forward; empty if cyclic.
  std::vector<Vertex> order;
  /// Directed cycle c0 -> c1 -> ... -> c0; empty if acyclic.
  std::vector<Vertex> cycle;

  bool acyclic() const noexcept { return cycle.empty(); }
};

/// Kahn's algorithm with smallest-id-first tie-breaking, so the order is
/// deterministic. On failure, a directed cycle is extracted as witness.
TopologicalResult topological_order(const PolytopeGraph& g, const Orientation& o);

bool is_acyclic(const PolytopeGraph& g, const Orientation& o);

/// In-degree histogram (h_0, ..., h_d).
struct HVector {
  std::vector<std::int64_t> counts;

  int dim() const noexcept { return static_cast<int>(counts.size()) - 1; }
  std::int64_t total() const;

  friend bool operator==(const HVector&, const HVector&) = default;
};

HVector indegree_histogram(const PolytopeGraph& g, const Orientation& o);

/// In-degree of every vertex.
std::vector<int> indegrees(const PolytopeGraph& g, const Orientation& o);

/// Sentinel for hk_sum selecting H = sum_i h_i 2^i.
inline constexpr int kAllFaces = -1;

/// H^k = sum_i h_i binom(i, k), or H when k == kAllFaces. Exact; throws
/// Overflow instead of wrapping.
std::int64_t hk_sum(const HVector& h, int k);

/// binom(n, k) from a Pascal table; 0 when k < 0 or k > n. Throws Overflow
/// for n > 62.
std::int64_t binomial(int n, int k);

/// Sinks of the oriented subgraph induced by w. Requires an acyclic
/// orientation (throws NotAcyclic) and non-empty w (throws EmptySubset).
VertexSet sinks_in_subset(const PolytopeGraph& g, const Orientation& o, std::span<const Vertex> w);

/// Same count as sinks_in_subset(...).size() without the acyclicity and
/// binding checks. For hot loops over already verified orientations.
std::size_t count_sinks_unchecked(const PolytopeGraph& g, const Orientation& o,
                                  std::span<const Vertex> w);

Orientation reverse_orientation(const Orientation& o);

}  // namespace ksys
