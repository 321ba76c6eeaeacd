#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ksys/graph.hpp"

namespace ksys {

/// A star K_{1,k} inside the graph: a root and k of its neighbors.
struct KFrame {
  Vertex root = 0;
  VertexSet leaves;

  friend auto operator<=>(const KFrame&, const KFrame&) = default;
  friend bool operator==(const KFrame&, const KFrame&) = default;
};

/// "(r|l1,...,lk)"
std::string to_string(const KFrame& frame);

/// Family of distinct vertex sets tagged with a dimension k and bound to a
/// graph fingerprint. Sets are sorted on construction and the family is kept
/// in lexicographic order. Duplicate sets are rejected rather than merged.
class SetSystem {
 public:
  SetSystem() = default;
  SetSystem(std::string graph_fingerprint, int k, std::vector<VertexSet> sets);

  int k() const noexcept { return k_; }
  std::size_t size() const noexcept { return sets_.size(); }
  bool empty() const noexcept { return sets_.empty(); }
  std::span<const VertexSet> sets() const noexcept { return sets_; }
  const VertexSet& operator[](std::size_t i) const { return sets_.at(i); }
  const std::string& graph_fingerprint() const noexcept { return fingerprint_; }

  bool contains(const VertexSet& sorted_set) const;
  std::int64_t size_sum() const;

  friend bool operator==(const SetSystem&, const SetSystem&) = default;

 private:
  std::string fingerprint_;
  int k_ = 0;
  std::vector<VertexSet> sets_;
};

/// Throws FingerprintMismatch or VertexOutOfRange.
void check_binding(const PolytopeGraph& g, const SetSystem& s);

/// Dense ids for all k-frames of a graph, in canonical (root, sorted leaves)
/// order. Leaves are addressed by a bitmask over neighbor positions.
class FrameIndex {
 public:
  FrameIndex(const PolytopeGraph& g, int k);

  int k() const noexcept { return k_; }
  std::size_t size() const noexcept { return per_root_ * static_cast<std::size_t>(n_); }
  std::size_t frames_per_root() const noexcept { return per_root_; }

  /// Leaf masks in canonical order; shared by all roots.
  std::span<const std::uint32_t> leaf_masks() const noexcept { return masks_; }

  std::optional<std::size_t> find(Vertex root, std::uint32_t leaf_mask) const;
  std::optional<std::size_t> find(const PolytopeGraph& g, const KFrame& frame) const;
  KFrame frame(const PolytopeGraph& g, std::size_t id) const;

 private:
  int k_ = 0;
  int n_ = 0;
  std::size_t per_root_ = 0;
  std::vector<std::uint32_t> masks_;
  std::vector<std::int32_t> rank_of_mask_;
};

/// Every k-frame exactly once; n * binom(d, k) of them. Requires 2 <= k <= d-1.
std::vector<KFrame> enumerate_k_frames(const PolytopeGraph& g, int k);

/// Number of member sets containing each frame's node set.
class FrameCoverage {
 public:
  FrameCoverage(FrameIndex index, std::vector<std::size_t> counts)
      : index_(std::move(index)), counts_(std::move(counts)) {}

  const FrameIndex& index() const noexcept { return index_; }
  std::span<const std::size_t> counts() const noexcept { return counts_; }
  std::size_t count(const PolytopeGraph& g, const KFrame& frame) const;
  std::size_t total() const;

 private:
  FrameIndex index_;
  std::vector<std::size_t> counts_;
};

/// Exact coverage for any family: a set S contains frame (r, L) iff r is in
/// S and L is a k-subset of the neighbors of r inside S.
FrameCoverage frame_coverage(const PolytopeGraph& g, const SetSystem& s);

/// True iff the subgraph induced by the sorted set is k-regular.
bool induces_regular(const PolytopeGraph& g, std::span<const Vertex> set, int k);
bool induces_connected(const PolytopeGraph& g, std::span<const Vertex> set);

struct KSystemReport {
  bool valid = false;
  int k = 0;
  /// Per member set: induced subgraph is k-regular.
  std::vector<bool> regular;
  /// Frames whose coverage count differs from 1.
  std::vector<std::pair<KFrame, std::size_t>> coverage_defects;
  std::int64_t member_size_sum = 0;
  std::int64_t frame_count = 0;

  /// Verdict line followed by one line per defect.
  std::vector<std::string> lines() const;
};

KSystemReport validate_k_system(const PolytopeGraph& g, const SetSystem& s);

inline bool is_k_system(const PolytopeGraph& g, const SetSystem& s) {
  return validate_k_system(g, s).valid;
}

}  // namespace ksys
