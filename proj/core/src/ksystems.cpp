#include "ksys/ksystems.hpp"

#include <algorithm>
#include <bit>

#include "ksys/error.hpp"

namespace ksys {

namespace {

void check_k(const PolytopeGraph& g, int k) {
  if (k < 2 || k > g.dim() - 1) {
    throw Error(ErrorCode::KOutOfRange,
                "k=" + std::to_string(k) + " outside 2..d-1 for d=" + std::to_string(g.dim()));
  }
}

void lex_combinations(int d, int k, int start, std::uint32_t mask, std::vector<std::uint32_t>& out) {
  if (k == 0) {
    out.push_back(mask);
    return;
  }
  for (int i = start; i <= d - k; ++i) lex_combinations(d, k - 1, i + 1, mask | (1u << i), out);
}

std::uint32_t inside_mask(const PolytopeGraph& g, Vertex v, std::span<const Vertex> set) {
  std::uint32_t mask = 0;
  auto nbrs = g.neighbors(v);
  for (std::size_t i = 0; i < nbrs.size(); ++i) {
    if (std::binary_search(set.begin(), set.end(), nbrs[i])) mask |= 1u << i;
  }
  return mask;
}

}  // namespace

std::string to_string(const KFrame& frame) {
  std::string out = "(" + std::to_string(frame.root) + "|";
  for (std::size_t i = 0; i < frame.leaves.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(frame.leaves[i]);
  }
  return out + ")";
}

SetSystem::SetSystem(std::string graph_fingerprint, int k, std::vector<VertexSet> sets)
    : fingerprint_(std::move(graph_fingerprint)), k_(k), sets_(std::move(sets)) {
  for (std::size_t i = 0; i < sets_.size(); ++i) {
    auto& set = sets_[i];
    std::sort(set.begin(), set.end());
    if (std::adjacent_find(set.begin(), set.end()) != set.end()) {
      throw Error(ErrorCode::InvalidSet, "set #" + std::to_string(i) + " repeats a vertex");
    }
    if (static_cast<int>(set.size()) < k + 1) {
      throw Error(ErrorCode::SetTooSmall, "set #" + std::to_string(i) + " has " +
                                              std::to_string(set.size()) + " vertices, k=" +
                                              std::to_string(k));
    }
  }
  std::sort(sets_.begin(), sets_.end());
  if (std::adjacent_find(sets_.begin(), sets_.end()) != sets_.end()) {
    throw Error(ErrorCode::DuplicateSet, "set system lists a vertex set twice");
  }
}

bool SetSystem::contains(const VertexSet& sorted_set) const {
  return std::binary_search(sets_.begin(), sets_.end(), sorted_set);
}

std::int64_t SetSystem::size_sum() const {
  std::int64_t sum = 0;
  for (const auto& set : sets_) sum += static_cast<std::int64_t>(set.size());
  return sum;
}

void check_binding(const PolytopeGraph& g, const SetSystem& s) {
  if (s.graph_fingerprint() != g.fingerprint()) {
    throw Error(ErrorCode::FingerprintMismatch,
                "set system bound to " + s.graph_fingerprint() + ", graph is " + g.fingerprint());
  }
  for (const auto& set : s.sets()) {
    if (!set.empty() && (set.front() < 0 || set.back() >= g.num_vertices())) {
      throw Error(ErrorCode::VertexOutOfRange, "set system references a missing vertex");
    }
  }
}

FrameIndex::FrameIndex(const PolytopeGraph& g, int k) : k_(k), n_(g.num_vertices()) {
  check_k(g, k);
  if (g.dim() > 20) throw Error(ErrorCode::Overflow, "frame masks support d <= 20");
  lex_combinations(g.dim(), k, 0, 0, masks_);
  per_root_ = masks_.size();
  rank_of_mask_.assign(std::size_t{1} << g.dim(), -1);
  for (std::size_t r = 0; r < masks_.size(); ++r) rank_of_mask_[masks_[r]] = static_cast<std::int32_t>(r);
}

std::optional<std::size_t> FrameIndex::find(Vertex root, std::uint32_t leaf_mask) const {
  if (root < 0 || root >= n_ || leaf_mask >= rank_of_mask_.size()) return std::nullopt;
  auto rank = rank_of_mask_[leaf_mask];
  if (rank < 0) return std::nullopt;
  return static_cast<std::size_t>(root) * per_root_ + static_cast<std::size_t>(rank);
}

std::optional<std::size_t> FrameIndex::find(const PolytopeGraph& g, const KFrame& frame) const {
  std::uint32_t mask = 0;
  for (Vertex leaf : frame.leaves) {
    auto pos = g.neighbor_position(frame.root, leaf);
    if (!pos) return std::nullopt;
    mask |= 1u << *pos;
  }
  return find(frame.root, mask);
}

KFrame FrameIndex::frame(const PolytopeGraph& g, std::size_t id) const {
  KFrame f;
  f.root = static_cast<Vertex>(id / per_root_);
  std::uint32_t mask = masks_.at(id % per_root_);
  auto nbrs = g.neighbors(f.root);
  for (std::size_t i = 0; i < nbrs.size(); ++i) {
    if (mask & (1u << i)) f.leaves.push_back(nbrs[i]);
  }
  return f;
}

std::vector<KFrame> enumerate_k_frames(const PolytopeGraph& g, int k) {
  FrameIndex index(g, k);
  std::vector<KFrame> frames;
  frames.reserve(index.size());
  for (std::size_t id = 0; id < index.size(); ++id) frames.push_back(index.frame(g, id));
  return frames;
}

std::size_t FrameCoverage::count(const PolytopeGraph& g, const KFrame& frame) const {
  auto id = index_.find(g, frame);
  return id ? counts_[*id] : 0;
}

std::size_t FrameCoverage::total() const {
  std::size_t sum = 0;
  for (auto c : counts_) sum += c;
  return sum;
}

FrameCoverage frame_coverage(const PolytopeGraph& g, const SetSystem& s) {
  check_binding(g, s);
  FrameIndex index(g, s.k());
  std::vector<std::size_t> counts(index.size(), 0);
  for (const auto& set : s.sets()) {
    for (Vertex v : set) {
      std::uint32_t inside = inside_mask(g, v, set);
      if (std::popcount(inside) < s.k()) continue;
      for (std::size_t r = 0; r < index.frames_per_root(); ++r) {
        std::uint32_t leaves = index.leaf_masks()[r];
        if ((leaves & ~inside) == 0) ++counts[static_cast<std::size_t>(v) * index.frames_per_root() + r];
      }
    }
  }
  return FrameCoverage(std::move(index), std::move(counts));
}

bool induces_regular(const PolytopeGraph& g, std::span<const Vertex> set, int k) {
  for (Vertex v : set) {
    if (std::popcount(inside_mask(g, v, set)) != k) return false;
  }
  return true;
}

bool induces_connected(const PolytopeGraph& g, std::span<const Vertex> set) {
  if (set.empty()) return false;
  std::vector<char> seen(set.size(), 0);
  std::vector<std::size_t> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    Vertex v = set[stack.back()];
    stack.pop_back();
    for (Vertex u : g.neighbors(v)) {
      auto it = std::lower_bound(set.begin(), set.end(), u);
      if (it == set.end() || *it != u) continue;
      auto pos = static_cast<std::size_t>(it - set.begin());
      if (!seen[pos]) {
        seen[pos] = 1;
        ++reached;
        stack.push_back(pos);
      }
    }
  }
  return reached == set.size();
}

KSystemReport validate_k_system(const PolytopeGraph& g, const SetSystem& s) {
  KSystemReport report;
  report.k = s.k();
  FrameCoverage coverage = frame_coverage(g, s);
  bool all_regular = true;
  for (const auto& set : s.sets()) {
    bool ok = induces_regular(g, set, s.k());
    report.regular.push_back(ok);
    all_regular = all_regular && ok;
  }
  auto counts = coverage.counts();
  for (std::size_t id = 0; id < counts.size(); ++id) {
    if (counts[id] != 1) report.coverage_defects.emplace_back(coverage.index().frame(g, id), counts[id]);
  }
  report.member_size_sum = s.size_sum();
  report.frame_count = static_cast<std::int64_t>(coverage.index().size());
  report.valid = all_regular && report.coverage_defects.empty();
  return report;
}

std::vector<std::string> KSystemReport::lines() const {
  std::vector<std::string> out;
  std::size_t irregular = std::count(regular.begin(), regular.end(), false);
  if (valid) {
    out.push_back("VALID " + std::to_string(k) + "-system: " + std::to_string(regular.size()) +
                  " sets, " + std::to_string(frame_count) + " frames each covered once");
  } else {
    out.push_back("INVALID " + std::to_string(k) + "-system: " + std::to_string(irregular) +
                  " irregular sets, " + std::to_string(coverage_defects.size()) + " frame defects");
  }
  for (std::size_t i = 0; i < regular.size(); ++i) {
    if (!regular[i]) out.push_back("set #" + std::to_string(i) + " not " + std::to_string(k) + "-regular");
  }
  for (const auto& [frame, count] : coverage_defects) {
    out.push_back("frame " + to_string(frame) + " covered " + std::to_string(count) + " times");
  }
  return out;
}

}  // namespace ksys
