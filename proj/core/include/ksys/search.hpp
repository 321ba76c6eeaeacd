#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "ksys/graph.hpp"
#include "ksys/ksystems.hpp"
#include "ksys/oracle.hpp"

namespace ksys {

inline constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 22;
inline constexpr std::size_t kDefaultCandidateCap = 1'000'000;
inline constexpr std::size_t kDefaultCountCap = 10'000;

/// Edge indices in the order the orientation search assigns them: edges are
/// taken as their endpoints are reached by BFS from vertex 0, so short cycles
/// close early and cyclic partial assignments are cut off near the root.
std::vector<std::size_t> bfs_edge_order(const PolytopeGraph& g);

/// Calls visit on every acyclic orientation exactly once, in a deterministic
/// order; visit returns false to stop. Throws BudgetExceeded when 2^|E|
/// exceeds budget.
void enumerate_acyclic_orientations(const PolytopeGraph& g, std::uint64_t budget,
                                    const std::function<bool(const Orientation&)>& visit);

/// Same sequence as enumerate_acyclic_orientations, computed by `jobs`
/// workers over disjoint prefixes of the edge order.
std::vector<Orientation> collect_acyclic_orientations(const PolytopeGraph& g, std::uint64_t budget,
                                                      unsigned jobs = 1);

std::uint64_t count_acyclic_orientations(const PolytopeGraph& g, std::uint64_t budget, unsigned jobs = 1);

struct HkMinimum {
  int k = 0;
  std::int64_t value = 0;
  /// First minimizer in enumeration order.
  Orientation witness;
  std::uint64_t minimizers = 0;
};

/// Exact minimum of hk_sum over all acyclic orientations; k may be kAllFaces.
HkMinimum minimize_hk(const PolytopeGraph& g, int k, std::uint64_t budget = kDefaultBudget, unsigned jobs = 1);

/// Vertex sets inducing connected k-regular subgraphs, sorted. Each set is
/// grown from its smallest vertex; at every step the smallest member with
/// undecided neighbors picks exactly enough of them to reach degree k.
/// Throws CandidateCapExceeded past candidate_cap.
std::vector<VertexSet> regular_candidates(const PolytopeGraph& g, int k, std::size_t candidate_cap);

struct KSystemSearch {
  std::vector<SetSystem> systems;
  std::size_t candidates = 0;
  /// True when count_cap stopped the enumeration early.
  bool truncated = false;
};

/// Exact-cover enumeration of k-systems over connected candidates: the
/// universe is the set of k-frames, each candidate covers one frame per
/// member vertex. Branches on the uncovered frame with the fewest live
/// candidates (ties by frame id). Visit returns false to stop.
/// Returns false if stopped by count_cap or by the visitor.
bool enumerate_k_systems(const PolytopeGraph& g, int k, std::size_t candidate_cap, std::size_t count_cap,
                         const std::function<bool(const SetSystem&)>& visit);

KSystemSearch collect_k_systems(const PolytopeGraph& g, int k, std::size_t candidate_cap = kDefaultCandidateCap,
                                std::size_t count_cap = kDefaultCountCap, unsigned jobs = 1);

struct MaxKSystem {
  SetSystem system;
  std::size_t systems_seen = 0;
  bool exhaustive = true;
};

/// Largest k-system among those enumerated (first one wins ties).
MaxKSystem max_k_system(const PolytopeGraph& g, int k, std::size_t candidate_cap = kDefaultCandidateCap,
                        std::size_t count_cap = kDefaultCountCap, unsigned jobs = 1);

/// Looks for an acyclic orientation with a unique sink on every k-face that is
/// nevertheless not an AOF-orientation. Returns the first one found.
std::optional<Orientation> search_k_sink_counterexample(const Instance& inst, int k,
                                                        std::uint64_t budget = kDefaultBudget, unsigned jobs = 1);

}  // namespace ksys
