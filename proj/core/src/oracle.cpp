#include "ksys/oracle.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "ksys/error.hpp"

namespace ksys {

namespace {

void for_each_subset(int n, int size, std::vector<int>& chosen, int start,
                     const std::function<void(const std::vector<int>&)>& visit) {
  if (static_cast<int>(chosen.size()) == size) {
    visit(chosen);
    return;
  }
  for (int i = start; i < n; ++i) {
    chosen.push_back(i);
    for_each_subset(n, size, chosen, i + 1, visit);
    chosen.pop_back();
  }
}

VertexSet intersect(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

std::vector<std::vector<int>> facets_through(const Instance& inst) {
  std::vector<std::vector<int>> through(inst.graph.num_vertices());
  for (std::size_t f = 0; f < inst.facets.size(); ++f) {
    for (Vertex v : inst.facets[f]) through.at(v).push_back(static_cast<int>(f));
  }
  return through;
}

Instance make_instance(std::string name, PolytopeGraph graph, std::vector<VertexSet> facets,
                       std::optional<std::vector<Point>> coords) {
  const int d = graph.dim();
  const int n = graph.num_vertices();
  for (auto& facet : facets) {
    std::sort(facet.begin(), facet.end());
    if (facet.empty() || facet.front() < 0 || facet.back() >= n ||
        std::adjacent_find(facet.begin(), facet.end()) != facet.end()) {
      throw Error(ErrorCode::NotSimple, name + ": malformed facet");
    }
  }
  std::sort(facets.begin(), facets.end());
  if (std::adjacent_find(facets.begin(), facets.end()) != facets.end()) {
    throw Error(ErrorCode::NotSimple, name + ": repeated facet");
  }
  if (coords) {
    if (static_cast<int>(coords->size()) != n) throw Error(ErrorCode::InvalidParams, name + ": coordinate count");
    for (const auto& p : *coords) {
      if (static_cast<int>(p.size()) != d) throw Error(ErrorCode::InvalidParams, name + ": coordinate dimension");
    }
  }
  Instance inst{std::move(name), std::move(graph), std::move(facets), std::move(coords)};

  auto through = facets_through(inst);
  for (Vertex v = 0; v < n; ++v) {
    if (static_cast<int>(through[v].size()) != d) {
      throw Error(ErrorCode::NotSimple, inst.name + ": vertex " + std::to_string(v) + " lies in " +
                                            std::to_string(through[v].size()) + " facets");
    }
  }
  for (const auto& facet : inst.facets) {
    if (!induces_regular(inst.graph, facet, d - 1) || !induces_connected(inst.graph, facet)) {
      throw Error(ErrorCode::NotSimple, inst.name + ": facet does not induce a connected (d-1)-regular graph");
    }
  }
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      std::vector<int> common;
      std::set_intersection(through[a].begin(), through[a].end(), through[b].begin(), through[b].end(),
                            std::back_inserter(common));
      bool shares = static_cast<int>(common.size()) == d - 1;
      if (shares != inst.graph.adjacent(a, b)) {
        throw Error(ErrorCode::NotSimple, inst.name + ": adjacency of " + std::to_string(a) + "," +
                                              std::to_string(b) + " disagrees with facet incidences");
      }
    }
  }
  return inst;
}

Instance make_simplex(int d) {
  if (d < 1 || d > 20) throw Error(ErrorCode::InvalidParams, "simplex dimension must be in 1..20");
  const int n = d + 1;
  std::vector<Edge> edges;
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b) edges.push_back({a, b});
  std::vector<VertexSet> facets;
  for (Vertex omit = 0; omit < n; ++omit) {
    VertexSet facet;
    for (Vertex v = 0; v < n; ++v)
      if (v != omit) facet.push_back(v);
    facets.push_back(std::move(facet));
  }
  // Vertex 0 at the origin, vertex i at the i-th unit vector.
  std::vector<Point> coords(n, Point(d, Rational(0)));
  for (int i = 1; i < n; ++i) coords[i][i - 1] = 1;
  return make_instance("simplex(" + std::to_string(d) + ")", validate_graph(d, n, std::move(edges)),
                       std::move(facets), std::move(coords));
}

Instance make_cube(int d) {
  if (d < 1 || d > 16) throw Error(ErrorCode::InvalidParams, "cube dimension must be in 1..16");
  const int n = 1 << d;
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v)
    for (int bit = 0; bit < d; ++bit)
      if (!(v & (1 << bit))) edges.push_back({v, v | (1 << bit)});
  std::vector<VertexSet> facets;
  for (int bit = 0; bit < d; ++bit) {
    for (int side = 0; side < 2; ++side) {
      VertexSet facet;
      for (Vertex v = 0; v < n; ++v)
        if (((v >> bit) & 1) == side) facet.push_back(v);
      facets.push_back(std::move(facet));
    }
  }
  std::vector<Point> coords(n, Point(d, Rational(0)));
  for (Vertex v = 0; v < n; ++v)
    for (int bit = 0; bit < d; ++bit) coords[v][bit] = (v >> bit) & 1;
  return make_instance("cube(" + std::to_string(d) + ")", validate_graph(d, n, std::move(edges)),
                       std::move(facets), std::move(coords));
}

Instance make_product(const Instance& a, const Instance& b) {
  const int na = a.graph.num_vertices();
  const int nb = b.graph.num_vertices();
  const int d = a.dim() + b.dim();
  if (d > 20) throw Error(ErrorCode::InvalidParams, "product dimension too large");
  auto id = [nb](Vertex x, Vertex y) { return x * nb + y; };
  std::vector<Edge> edges;
  for (const Edge& e : a.graph.edges())
    for (Vertex y = 0; y < nb; ++y) edges.push_back({id(e.u, y), id(e.v, y)});
  for (Vertex x = 0; x < na; ++x)
    for (const Edge& e : b.graph.edges()) edges.push_back({id(x, e.u), id(x, e.v)});
  std::vector<VertexSet> facets;
  for (const auto& fa : a.facets) {
    VertexSet facet;
    for (Vertex x : fa)
      for (Vertex y = 0; y < nb; ++y) facet.push_back(id(x, y));
    facets.push_back(std::move(facet));
  }
  for (const auto& fb : b.facets) {
    VertexSet facet;
    for (Vertex x = 0; x < na; ++x)
      for (Vertex y : fb) facet.push_back(id(x, y));
    facets.push_back(std::move(facet));
  }
  std::optional<std::vector<Point>> coords;
  if (a.coords && b.coords) {
    coords.emplace();
    for (Vertex x = 0; x < na; ++x) {
      for (Vertex y = 0; y < nb; ++y) {
        Point p = (*a.coords)[x];
        p.insert(p.end(), (*b.coords)[y].begin(), (*b.coords)[y].end());
        coords->push_back(std::move(p));
      }
    }
  }
  return make_instance("product(" + a.name + "," + b.name + ")",
                       validate_graph(d, na * nb, std::move(edges)), std::move(facets), std::move(coords));
}

Instance truncate_vertex(const Instance& inst, Vertex v) {
  const PolytopeGraph& g = inst.graph;
  const int d = g.dim();
  const int n = g.num_vertices();
  if (v < 0 || v >= n) throw Error(ErrorCode::InvalidParams, "truncation vertex out of range");
  if (d < 2) throw Error(ErrorCode::InvalidParams, "truncation needs d >= 2");
  auto through = facets_through(inst);
  if (static_cast<int>(through[v].size()) != d) throw Error(ErrorCode::NotSimple, "vertex not in d facets");

  auto renumber = [v](Vertex x) { return x < v ? x : x - 1; };
  auto nbrs = g.neighbors(v);
  auto fresh = [&](int j) { return n - 1 + j; };

  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (e.u != v && e.v != v) edges.push_back({renumber(e.u), renumber(e.v)});
  }
  for (int j = 0; j < d; ++j) {
    edges.push_back({renumber(nbrs[j]), fresh(j)});
    for (int i = j + 1; i < d; ++i) edges.push_back({fresh(j), fresh(i)});
  }

  std::vector<VertexSet> facets;
  for (const auto& facet : inst.facets) {
    VertexSet next;
    bool through_v = std::binary_search(facet.begin(), facet.end(), v);
    for (Vertex x : facet)
      if (x != v) next.push_back(renumber(x));
    if (through_v) {
      for (int j = 0; j < d; ++j)
        if (std::binary_search(facet.begin(), facet.end(), nbrs[j])) next.push_back(fresh(j));
    }
    facets.push_back(std::move(next));
  }
  VertexSet cap;
  for (int j = 0; j < d; ++j) cap.push_back(fresh(j));
  facets.push_back(std::move(cap));

  return make_instance("truncate(" + inst.name + "," + std::to_string(v) + ")",
                       validate_graph(d, n - 1 + d, std::move(edges)), std::move(facets), std::nullopt);
}

Instance make_fig1() {
  // Vertices 0 = (0,0,0) and 3 = (1,1,0) are opposite corners of the z = 0
  // square. After the first cut, old vertex 3 is renumbered to 2.
  Instance once = truncate_vertex(make_cube(3), 0);
  Instance twice = truncate_vertex(once, 2);
  twice.name = "fig1";
  return twice;
}

SetSystem faces_from_incidence(const Instance& inst, int k) {
  const int d = inst.dim();
  if (k < 0 || k > d - 1) {
    throw Error(ErrorCode::KOutOfRange, "k=" + std::to_string(k) + " outside 0..d-1");
  }
  auto through = facets_through(inst);
  std::set<VertexSet> faces;
  std::vector<int> chosen;
  for (Vertex v = 0; v < inst.graph.num_vertices(); ++v) {
    for_each_subset(d, d - k, chosen, 0, [&](const std::vector<int>& pick) {
      VertexSet face = inst.facets[through[v][pick[0]]];
      for (std::size_t i = 1; i < pick.size(); ++i) face = intersect(face, inst.facets[through[v][pick[i]]]);
      faces.insert(std::move(face));
    });
  }
  for (const auto& face : faces) {
    if (static_cast<int>(face.size()) < k + 1 || !induces_regular(inst.graph, face, k) ||
        !induces_connected(inst.graph, face)) {
      throw Error(ErrorCode::NotSimple, inst.name + ": face intersection is not a connected " +
                                            std::to_string(k) + "-regular set");
    }
  }
  return SetSystem(inst.graph.fingerprint(), k, std::vector<VertexSet>(faces.begin(), faces.end()));
}

std::vector<std::int64_t> f_vector(const Instance& inst) {
  std::vector<std::int64_t> f;
  for (int k = 0; k < inst.dim(); ++k) f.push_back(static_cast<std::int64_t>(faces_from_incidence(inst, k).size()));
  return f;
}

Orientation geometric_aof(const Instance& inst, std::span<const Rational> weights) {
  if (!inst.coords) throw Error(ErrorCode::NoCoordinates, inst.name);
  if (static_cast<int>(weights.size()) != inst.dim()) {
    throw Error(ErrorCode::InvalidParams, "need " + std::to_string(inst.dim()) + " weights");
  }
  const int n = inst.graph.num_vertices();
  std::vector<Rational> value(n);
  for (Vertex v = 0; v < n; ++v) {
    Rational sum = 0;
    for (int i = 0; i < inst.dim(); ++i) sum += (*inst.coords)[v][i] * weights[i];
    value[v] = sum;
  }
  std::vector<Rational> sorted = value;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error(ErrorCode::DegenerateWeights, "two vertices share a functional value");
  }
  std::vector<std::uint8_t> heads(inst.graph.num_edges());
  for (std::size_t e = 0; e < heads.size(); ++e) {
    const Edge& edge = inst.graph.edge(e);
    heads[e] = value[edge.v] > value[edge.u] ? 1 : 0;
  }
  return Orientation(inst.graph.fingerprint(), std::move(heads));
}

AofOracle::AofOracle(const Instance& inst) : graph_(inst.graph) {
  for (int k = 1; k < inst.dim(); ++k) {
    auto faces = faces_from_incidence(inst, k);
    faces_.insert(faces_.end(), faces.sets().begin(), faces.sets().end());
  }
  VertexSet all(inst.graph.num_vertices());
  for (Vertex v = 0; v < inst.graph.num_vertices(); ++v) all[v] = v;
  faces_.push_back(std::move(all));
}

bool AofOracle::operator()(const Orientation& o) const {
  check_binding(graph_, o);
  if (!is_acyclic(graph_, o)) return false;
  return std::all_of(faces_.begin(), faces_.end(),
                     [&](const VertexSet& face) { return count_sinks_unchecked(graph_, o, face) == 1; });
}

bool is_aof_oracle(const Instance& inst, const Orientation& o) { return AofOracle(inst)(o); }

}  // namespace ksys
