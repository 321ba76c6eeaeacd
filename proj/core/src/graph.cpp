#include "ksys/graph.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <numeric>
#include <queue>

#include "ksys/error.hpp"

namespace ksys {

namespace {

std::uint64_t fnv1a(std::uint64_t hash, std::string_view bytes) {
  for (unsigned char c : bytes) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  return hash;
}

bool contains(std::span<const Vertex> sorted, Vertex v) {
  return std::binary_search(sorted.begin(), sorted.end(), v);
}

}  // namespace

std::string graph_fingerprint(int d, int n, std::span<const Edge> sorted_edges) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  std::string token = std::to_string(d) + "," + std::to_string(n) + ";";
  hash = fnv1a(hash, token);
  for (const Edge& e : sorted_edges) {
    token = std::to_string(e.u) + "-" + std::to_string(e.v) + ";";
    hash = fnv1a(hash, token);
  }
  std::array<char, 17> buf{};
  std::snprintf(buf.data(), buf.size(), "%016llx", static_cast<unsigned long long>(hash));
  return std::string(buf.data(), 16);
}

PolytopeGraph validate_graph(int d, int n, std::vector<Edge> edge_list) {
  if (d < 1) throw Error(ErrorCode::NotRegular, "dimension must be at least 1");
  if (n < 1) throw Error(ErrorCode::Disconnected, "graph has no vertices");
  for (Edge& e : edge_list) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) {
      throw Error(ErrorCode::VertexOutOfRange,
                  "edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "}");
    }
    if (e.u == e.v) throw Error(ErrorCode::SelfLoop, "at vertex " + std::to_string(e.u));
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edge_list.begin(), edge_list.end());
  if (auto it = std::adjacent_find(edge_list.begin(), edge_list.end()); it != edge_list.end()) {
    throw Error(ErrorCode::DuplicateEdge,
                "{" + std::to_string(it->u) + "," + std::to_string(it->v) + "}");
  }

  PolytopeGraph g;
  g.d_ = d;
  g.adjacency_.assign(n, {});
  g.incident_.assign(n, {});
  for (std::size_t i = 0; i < edge_list.size(); ++i) {
    g.adjacency_[edge_list[i].u].push_back(edge_list[i].v);
    g.adjacency_[edge_list[i].v].push_back(edge_list[i].u);
  }
  for (Vertex v = 0; v < n; ++v) {
    auto& nbrs = g.adjacency_[v];
    if (static_cast<int>(nbrs.size()) != d) {
      throw Error(ErrorCode::NotRegular, "vertex " + std::to_string(v) + " has degree " +
                                             std::to_string(nbrs.size()) + ", expected " +
                                             std::to_string(d));
    }
    std::sort(nbrs.begin(), nbrs.end());
  }
  g.edges_ = std::move(edge_list);
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex u : g.adjacency_[v]) {
      Edge key{std::min(u, v), std::max(u, v)};
      auto it = std::lower_bound(g.edges_.begin(), g.edges_.end(), key);
      g.incident_[v].push_back(static_cast<std::size_t>(it - g.edges_.begin()));
    }
  }

  std::vector<char> seen(n, 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex u : g.adjacency_[v]) {
      if (!seen[u]) {
        seen[u] = 1;
        ++reached;
        stack.push_back(u);
      }
    }
  }
  if (reached != n) {
    throw Error(ErrorCode::Disconnected, std::to_string(n - reached) + " vertices unreachable from 0");
  }

  g.fingerprint_ = graph_fingerprint(d, n, g.edges_);
  return g;
}

bool PolytopeGraph::adjacent(Vertex a, Vertex b) const { return neighbor_position(a, b).has_value(); }

std::optional<int> PolytopeGraph::neighbor_position(Vertex a, Vertex b) const {
  if (a < 0 || a >= num_vertices()) return std::nullopt;
  const auto& nbrs = adjacency_[a];
  auto it = std::lower_bound(nbrs.begin(), nbrs.end(), b);
  if (it == nbrs.end() || *it != b) return std::nullopt;
  return static_cast<int>(it - nbrs.begin());
}

std::optional<std::size_t> PolytopeGraph::find_edge(Vertex a, Vertex b) const {
  auto pos = neighbor_position(a, b);
  if (!pos) return std::nullopt;
  return incident_[a][*pos];
}

Orientation::Orientation(std::string graph_fingerprint, std::vector<std::uint8_t> heads)
    : fingerprint_(std::move(graph_fingerprint)), heads_(std::move(heads)) {
  for (auto h : heads_) {
    if (h > 1) throw Error(ErrorCode::ParseError, "orientation heads must be 0 or 1");
  }
}

Vertex Orientation::head(const PolytopeGraph& g, std::size_t e) const {
  const Edge& edge = g.edge(e);
  return heads_.at(e) ? edge.v : edge.u;
}

Vertex Orientation::tail(const PolytopeGraph& g, std::size_t e) const {
  const Edge& edge = g.edge(e);
  return heads_.at(e) ? edge.u : edge.v;
}

Orientation Orientation::flipped(std::size_t e) const {
  Orientation copy = *this;
  copy.heads_.at(e) ^= 1;
  return copy;
}

void check_binding(const PolytopeGraph& g, const Orientation& o) {
  if (o.graph_fingerprint() != g.fingerprint()) {
    throw Error(ErrorCode::FingerprintMismatch,
                "orientation bound to " + o.graph_fingerprint() + ", graph is " + g.fingerprint());
  }
  if (o.size() != g.num_edges()) {
    throw Error(ErrorCode::FingerprintMismatch, "orientation has " + std::to_string(o.size()) +
                                                    " heads for " + std::to_string(g.num_edges()) +
                                                    " edges");
  }
}

Orientation orient_toward_larger(const PolytopeGraph& g, std::span<const std::int64_t> values) {
  if (static_cast<int>(values.size()) != g.num_vertices()) {
    throw Error(ErrorCode::InvalidParams, "need one value per vertex");
  }
  std::vector<std::uint8_t> heads(g.num_edges());
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    const Edge& edge = g.edge(e);
    if (values[edge.u] == values[edge.v]) {
      throw Error(ErrorCode::DegenerateWeights, "adjacent vertices with equal value");
    }
    heads[e] = values[edge.v] > values[edge.u] ? 1 : 0;
  }
  return Orientation(g.fingerprint(), std::move(heads));
}

TopologicalResult topological_order(const PolytopeGraph& g, const Orientation& o) {
  check_binding(g, o);
  const int n = g.num_vertices();
  std::vector<int> indeg = indegrees(g, o);
  std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> ready;
  for (Vertex v = 0; v < n; ++v) {
    if (indeg[v] == 0) ready.push(v);
  }
  TopologicalResult result;
  result.order.reserve(n);
  while (!ready.empty()) {
    Vertex v = ready.top();
    ready.pop();
    result.order.push_back(v);
    auto nbrs = g.neighbors(v);
    auto inc = g.incident_edges(v);
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      if (o.head(g, inc[i]) == nbrs[i] && --indeg[nbrs[i]] == 0) ready.push(nbrs[i]);
    }
  }
  if (static_cast<int>(result.order.size()) == n) return result;

  // Every leftover vertex has an in-edge from another leftover vertex, so
  // walking backwards along in-edges must revisit a vertex.
  std::vector<char> removed(n, 0);
  for (Vertex v : result.order) removed[v] = 1;
  Vertex start = 0;
  while (removed[start]) ++start;
  std::vector<int> visit_index(n, -1);
  std::vector<Vertex> walk;
  Vertex cur = start;
  while (visit_index[cur] < 0) {
    visit_index[cur] = static_cast<int>(walk.size());
    walk.push_back(cur);
    auto nbrs = g.neighbors(cur);
    auto inc = g.incident_edges(cur);
    Vertex pred = -1;
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      if (!removed[nbrs[i]] && o.head(g, inc[i]) == cur) {
        pred = nbrs[i];
        break;
      }
    }
    cur = pred;
  }
  std::vector<Vertex> cycle(walk.begin() + visit_index[cur], walk.end());
  std::reverse(cycle.begin(), cycle.end());
  result.order.clear();
  result.cycle = std::move(cycle);
  return result;
}

bool is_acyclic(const PolytopeGraph& g, const Orientation& o) {
  return topological_order(g, o).acyclic();
}

std::vector<int> indegrees(const PolytopeGraph& g, const Orientation& o) {
  check_binding(g, o);
  std::vector<int> indeg(g.num_vertices(), 0);
  for (std::size_t e = 0; e < g.num_edges(); ++e) ++indeg[o.head(g, e)];
  return indeg;
}

std::int64_t HVector::total() const { return std::accumulate(counts.begin(), counts.end(), std::int64_t{0}); }

HVector indegree_histogram(const PolytopeGraph& g, const Orientation& o) {
  HVector h;
  h.counts.assign(g.dim() + 1, 0);
  for (int deg : indegrees(g, o)) ++h.counts[deg];
  return h;
}

std::int64_t binomial(int n, int k) {
  static constexpr int kMaxRow = 62;
  static const std::vector<std::vector<std::int64_t>> pascal = [] {
    std::vector<std::vector<std::int64_t>> rows(kMaxRow + 1);
    for (int i = 0; i <= kMaxRow; ++i) {
      rows[i].assign(i + 1, 1);
      for (int j = 1; j < i; ++j) rows[i][j] = rows[i - 1][j - 1] + rows[i - 1][j];
    }
    return rows;
  }();
  if (k < 0 || n < 0 || k > n) return 0;
  if (n > kMaxRow) throw Error(ErrorCode::Overflow, "binomial row " + std::to_string(n));
  return pascal[n][k];
}

std::int64_t hk_sum(const HVector& h, int k) {
  const int d = h.dim();
  if (k != kAllFaces && (k < 0 || k > d)) {
    throw Error(ErrorCode::KOutOfRange, "k=" + std::to_string(k) + " with d=" + std::to_string(d));
  }
  std::int64_t total = 0;
  for (int i = 0; i <= d; ++i) {
    std::int64_t weight = 0;
    if (k == kAllFaces) {
      if (i > 62) throw Error(ErrorCode::Overflow, "2^" + std::to_string(i));
      weight = std::int64_t{1} << i;
    } else {
      weight = binomial(i, k);
    }
    std::int64_t term = 0;
    if (__builtin_mul_overflow(h.counts[i], weight, &term) ||
        __builtin_add_overflow(total, term, &total)) {
      throw Error(ErrorCode::Overflow, "hk_sum");
    }
  }
  return total;
}

std::size_t count_sinks_unchecked(const PolytopeGraph& g, const Orientation& o,
                                  std::span<const Vertex> w) {
  std::size_t sinks = 0;
  for (Vertex v : w) {
    auto nbrs = g.neighbors(v);
    auto inc = g.incident_edges(v);
    bool sink = true;
    for (std::size_t i = 0; i < nbrs.size() && sink; ++i) {
      if (contains(w, nbrs[i]) && o.head(g, inc[i]) != v) sink = false;
    }
    if (sink) ++sinks;
  }
  return sinks;
}

VertexSet sinks_in_subset(const PolytopeGraph& g, const Orientation& o, std::span<const Vertex> w) {
  check_binding(g, o);
  if (w.empty()) throw Error(ErrorCode::EmptySubset, "sinks_in_subset");
  VertexSet members(w.begin(), w.end());
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  for (Vertex v : members) {
    if (v < 0 || v >= g.num_vertices()) throw Error(ErrorCode::VertexOutOfRange, std::to_string(v));
  }
  if (!is_acyclic(g, o)) throw Error(ErrorCode::NotAcyclic, "sinks_in_subset");
  VertexSet sinks;
  for (Vertex v : members) {
    auto nbrs = g.neighbors(v);
    auto inc = g.incident_edges(v);
    bool sink = true;
    for (std::size_t i = 0; i < nbrs.size() && sink; ++i) {
      if (contains(members, nbrs[i]) && o.head(g, inc[i]) != v) sink = false;
    }
    if (sink) sinks.push_back(v);
  }
  return sinks;
}

Orientation reverse_orientation(const Orientation& o) {
  std::vector<std::uint8_t> heads(o.heads().begin(), o.heads().end());
  for (auto& h : heads) h ^= 1;
  return Orientation(o.graph_fingerprint(), std::move(heads));
}

}  // namespace ksys
