#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "ksys/graph.hpp"
#include "ksys/ksystems.hpp"

namespace ksys {

using Rational = boost::multiprecision::cpp_rational;
using Point = std::vector<Rational>;

/// Ground-truth description of a simple polytope at desk scale: its graph,
/// the vertex sets of its facets and (for geometric families) exact
/// coordinates.
struct Instance {
  std::string name;
  PolytopeGraph graph;
  std::vector<VertexSet> facets;
  std::optional<std::vector<Point>> coords;

  int dim() const noexcept { return graph.dim(); }
};

/// Checks the simple-polytope incidence invariants and returns the bundle:
/// every vertex lies in exactly d facets, every facet induces a connected
/// (d-1)-regular subgraph, and two vertices are adjacent iff they share
/// exactly d-1 facets. Throws NotSimple on violation.
Instance make_instance(std::string name, PolytopeGraph graph, std::vector<VertexSet> facets,
                       std::optional<std::vector<Point>> coords);

Instance make_simplex(int d);
Instance make_cube(int d);
Instance make_product(const Instance& a, const Instance& b);

/// Cuts off vertex v combinatorially. Vertex v disappears, the survivors keep
/// their relative order, and the d new vertices (one per former edge at v, in
/// the order of v's neighbor list) are appended. Coordinates are dropped.
Instance truncate_vertex(const Instance& inst, Vertex v);

/// The 3-cube with two non-adjacent vertices of one square face cut off.
Instance make_fig1();

/// Facet ids containing each vertex.
std::vector<std::vector<int>> facets_through(const Instance& inst);

/// Vertex sets of all k-faces, 0 <= k <= d-1, as intersections of d-k
/// facets through a common vertex.
SetSystem faces_from_incidence(const Instance& inst, int k);

/// (f_0, ..., f_{d-1})
std::vector<std::int64_t> f_vector(const Instance& inst);

/// Orientation induced by the linear functional `weights` (edges point to the
/// larger value). Throws NoCoordinates or DegenerateWeights.
Orientation geometric_aof(const Instance& inst, std::span<const Rational> weights);

/// Full AOF test: acyclic, and a unique sink on every non-empty face. Face
/// lists are computed once at construction.
class AofOracle {
 public:
  explicit AofOracle(const Instance& inst);

  bool operator()(const Orientation& o) const;
  const PolytopeGraph& graph() const noexcept { return graph_; }

 private:
  PolytopeGraph graph_;
  std::vector<VertexSet> faces_;
};

bool is_aof_oracle(const Instance& inst, const Orientation& o);

}  // namespace ksys
