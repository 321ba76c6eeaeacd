#include "ksys/certificates.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "ksys/error.hpp"

namespace ksys {

std::string_view to_string(RefutationReason reason) {
  switch (reason) {
    case RefutationReason::None: return "none";
    case RefutationReason::NotKSystem: return "not a k-system";
    case RefutationReason::NotAcyclic: return "orientation not acyclic";
    case RefutationReason::CardinalityMismatch: return "cardinality differs from H^k";
    case RefutationReason::NotLarger: return "system not larger";
    case RefutationReason::NotSmaller: return "H^2 not smaller";
    case RefutationReason::MultipleSinks: return "more than one sink";
  }
  return "unknown";
}

namespace {

void check_k_range(const PolytopeGraph& g, int k) {
  if (k < 2 || k > g.dim() - 1) {
    throw Error(ErrorCode::KOutOfRange, "k=" + std::to_string(k) + " outside 2..d-1");
  }
}

std::string describe(const KSystemReport& report) {
  auto lines = report.lines();
  std::string out = lines.front();
  if (lines.size() > 1) out += "; first defect: " + lines[1];
  return out;
}

// |S| versus H^k(O) for an already validated system and bound orientation.
Verdict compare_cardinality(const PolytopeGraph& g, const SetSystem& s, const Orientation& o, int k) {
  if (!is_acyclic(g, o)) return Verdict::refuted(RefutationReason::NotAcyclic, "witness orientation has a directed cycle");
  std::int64_t hk = hk_sum(indegree_histogram(g, o), k);
  auto size = static_cast<std::int64_t>(s.size());
  std::string numbers = "|S|=" + std::to_string(size) + " H^" + std::to_string(k) + "=" + std::to_string(hk);
  if (hk != size) return Verdict::refuted(RefutationReason::CardinalityMismatch, numbers);
  return Verdict::ok(numbers);
}

}  // namespace

UniqueSinkResult unique_sink_per_set(const PolytopeGraph& g, const Orientation& o, const SetSystem& s) {
  check_binding(g, o);
  check_binding(g, s);
  if (!is_acyclic(g, o)) throw Error(ErrorCode::NotAcyclic, "unique_sink_per_set");
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (count_sinks_unchecked(g, o, s[i]) != 1) return {false, i};
  }
  return {};
}

Verdict verify_face_certificate(const PolytopeGraph& g, const FaceCertificate& c) {
  check_binding(g, c.claimed_sets);
  check_binding(g, c.witness_orientation);
  if (c.k != c.claimed_sets.k()) {
    throw Error(ErrorCode::KMismatch, "certificate k=" + std::to_string(c.k) + ", sets k=" +
                                          std::to_string(c.claimed_sets.k()));
  }
  check_k_range(g, c.k);
  auto report = validate_k_system(g, c.claimed_sets);
  if (!report.valid) return Verdict::refuted(RefutationReason::NotKSystem, describe(report));
  return compare_cardinality(g, c.claimed_sets, c.witness_orientation, c.k);
}

Verdict verify_larger_system(const PolytopeGraph& g, const SetSystem& s, const SetSystem& s_prime) {
  check_binding(g, s);
  check_binding(g, s_prime);
  if (s.k() != s_prime.k()) {
    throw Error(ErrorCode::KMismatch, std::to_string(s.k()) + " vs " + std::to_string(s_prime.k()));
  }
  check_k_range(g, s.k());
  auto report = validate_k_system(g, s_prime);
  if (!report.valid) return Verdict::refuted(RefutationReason::NotKSystem, describe(report));
  std::string numbers = "|S|=" + std::to_string(s.size()) + " |S'|=" + std::to_string(s_prime.size());
  if (s_prime.size() <= s.size()) return Verdict::refuted(RefutationReason::NotLarger, numbers);
  return Verdict::ok(numbers);
}

Verdict verify_aof_certificate(const PolytopeGraph& g, const AofCertificate& c) {
  check_binding(g, c.candidate_orientation);
  if (g.dim() < 2) throw Error(ErrorCode::DimensionTooSmall, "AOF certificates need d >= 2");
  const Orientation& o = c.candidate_orientation;
  if (g.dim() == 2) {
    // A polygon has no 2-systems in range; its only faces above edges are
    // the whole polygon, so check the single global sink directly.
    if (!is_acyclic(g, o)) return Verdict::refuted(RefutationReason::NotAcyclic, "candidate has a directed cycle");
    std::vector<Vertex> all(g.num_vertices());
    for (Vertex v = 0; v < g.num_vertices(); ++v) all[v] = v;
    auto sinks = count_sinks_unchecked(g, o, all);
    if (sinks != 1) return Verdict::refuted(RefutationReason::MultipleSinks, std::to_string(sinks) + " sinks");
    return Verdict::ok("polygon with a unique sink");
  }
  check_binding(g, c.witness_two_system);
  if (c.witness_two_system.k() != 2) throw Error(ErrorCode::KMismatch, "AOF witness must have k=2");
  auto report = validate_k_system(g, c.witness_two_system);
  if (!report.valid) return Verdict::refuted(RefutationReason::NotKSystem, describe(report));
  return compare_cardinality(g, c.witness_two_system, o, 2);
}

Verdict verify_smaller_h2(const PolytopeGraph& g, const Orientation& o, const Orientation& o_prime) {
  check_binding(g, o);
  check_binding(g, o_prime);
  if (g.dim() < 2) throw Error(ErrorCode::DimensionTooSmall, "H^2 needs d >= 2");
  if (!is_acyclic(g, o)) return Verdict::refuted(RefutationReason::NotAcyclic, "candidate has a directed cycle");
  if (!is_acyclic(g, o_prime)) return Verdict::refuted(RefutationReason::NotAcyclic, "witness has a directed cycle");
  auto h2 = hk_sum(indegree_histogram(g, o), 2);
  auto h2_prime = hk_sum(indegree_histogram(g, o_prime), 2);
  std::string numbers = "H^2(O)=" + std::to_string(h2) + " H^2(O')=" + std::to_string(h2_prime);
  if (h2_prime >= h2) return Verdict::refuted(RefutationReason::NotSmaller, numbers);
  return Verdict::ok(numbers);
}

SetSystem facets_from_2faces(const PolytopeGraph& g, const SetSystem& f2) {
  if (g.dim() < 3) throw Error(ErrorCode::DimensionTooSmall, "facets_from_2faces needs d >= 3");
  if (f2.k() != 2) throw Error(ErrorCode::KMismatch, "expected a 2-system");
  check_binding(g, f2);
  auto report = validate_k_system(g, f2);
  if (!report.valid) throw Error(ErrorCode::NotCycleSystem, report.lines().front());
  for (std::size_t i = 0; i < f2.size(); ++i) {
    if (!induces_connected(g, f2[i])) {
      throw Error(ErrorCode::NotCycleSystem, "set #" + std::to_string(i) + " is not a single cycle");
    }
  }

  // Each 2-frame lies in exactly one member, so frame id -> member index.
  FrameIndex frames(g, 2);
  std::vector<std::size_t> face_of(frames.size());
  for (std::size_t i = 0; i < f2.size(); ++i) {
    const auto& cycle = f2[i];
    for (Vertex v : cycle) {
      std::uint32_t mask = 0;
      auto nbrs = g.neighbors(v);
      for (std::size_t p = 0; p < nbrs.size(); ++p) {
        if (std::binary_search(cycle.begin(), cycle.end(), nbrs[p])) mask |= 1u << p;
      }
      face_of[*frames.find(v, mask)] = i;
    }
  }

  // Partner of neighbor a of u across edge {u, v}: the other cycle neighbor
  // of v on the 2-face spanned by {u,a} and {u,v}.
  auto transport = [&](Vertex u, Vertex v, Vertex a) {
    std::uint32_t mask = (1u << *g.neighbor_position(u, a)) | (1u << *g.neighbor_position(u, v));
    const auto& cycle = f2[face_of[*frames.find(u, mask)]];
    for (Vertex b : g.neighbors(v)) {
      if (b != u && std::binary_search(cycle.begin(), cycle.end(), b)) return b;
    }
    throw Error(ErrorCode::InconsistentTransport, "2-face through edge has no continuation");
  };

  const int n = g.num_vertices();
  std::set<VertexSet> facets;
  std::vector<Vertex> omitted(n);
  for (Vertex root = 0; root < n; ++root) {
    for (Vertex skip : g.neighbors(root)) {
      std::fill(omitted.begin(), omitted.end(), -1);
      omitted[root] = skip;
      std::deque<Vertex> queue{root};
      while (!queue.empty()) {
        Vertex u = queue.front();
        queue.pop_front();
        for (Vertex w : g.neighbors(u)) {
          if (w == omitted[u]) continue;
          Vertex partner = transport(u, w, omitted[u]);
          if (omitted[w] < 0) {
            omitted[w] = partner;
            queue.push_back(w);
          } else if (omitted[w] != partner) {
            throw Error(ErrorCode::InconsistentTransport,
                        "vertex " + std::to_string(w) + " omits both " + std::to_string(omitted[w]) +
                            " and " + std::to_string(partner) + " (seed " + std::to_string(root) + "/" +
                            std::to_string(skip) + ")");
          }
        }
      }
      VertexSet facet;
      for (Vertex v = 0; v < n; ++v)
        if (omitted[v] >= 0) facet.push_back(v);
      facets.insert(std::move(facet));
    }
  }

  std::vector<int> membership(n, 0);
  for (const auto& facet : facets) {
    if (!induces_regular(g, facet, g.dim() - 1) || !induces_connected(g, facet)) {
      throw Error(ErrorCode::InconsistentTransport, "grown set is not a connected (d-1)-regular subgraph");
    }
    for (Vertex v : facet) ++membership[v];
  }
  for (Vertex v = 0; v < n; ++v) {
    if (membership[v] != g.dim()) {
      throw Error(ErrorCode::InconsistentTransport, "vertex " + std::to_string(v) + " lies in " +
                                                        std::to_string(membership[v]) + " grown facets");
    }
  }
  return SetSystem(g.fingerprint(), g.dim() - 1, std::vector<VertexSet>(facets.begin(), facets.end()));
}

}  // namespace ksys
