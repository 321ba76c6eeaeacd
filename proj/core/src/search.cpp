#include "ksys/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <exception>
#include <limits>
#include <set>
#include <thread>

#include "ksys/certificates.hpp"
#include "ksys/error.hpp"

namespace ksys {

namespace {

using Heads = std::vector<std::uint8_t>;

void check_budget(const PolytopeGraph& g, std::uint64_t budget) {
  const std::size_t m = g.num_edges();
  if (m >= 64 || (std::uint64_t{1} << m) > budget) {
    throw Error(ErrorCode::BudgetExceeded, "2^" + std::to_string(m) + " orientations exceed budget " +
                                               std::to_string(budget));
  }
}

/// Depth-first assignment of edge directions along a fixed edge order,
/// refusing any direction that closes a directed cycle.
class OrientationWalker {
 public:
  OrientationWalker(const PolytopeGraph& g, const std::vector<std::size_t>& order)
      : g_(g), order_(order), heads_(g.num_edges(), 0), out_(g.num_vertices()), stamp_(g.num_vertices(), 0) {}

  bool assign(std::size_t e, std::uint8_t head) {
    const Edge& edge = g_.edge(e);
    Vertex to = head ? edge.v : edge.u;
    Vertex from = head ? edge.u : edge.v;
    if (reaches(to, from)) return false;
    heads_[e] = head;
    out_[from].push_back(to);
    return true;
  }

  void unassign(std::size_t e) {
    const Edge& edge = g_.edge(e);
    out_[heads_[e] ? edge.u : edge.v].pop_back();
  }

  template <class Leaf>
  bool walk(std::size_t pos, std::size_t stop, Leaf& leaf) {
    if (pos == stop) return leaf(static_cast<const Heads&>(heads_));
    std::size_t e = order_[pos];
    for (std::uint8_t head : {std::uint8_t{0}, std::uint8_t{1}}) {
      if (!assign(e, head)) continue;
      bool keep_going = walk(pos + 1, stop, leaf);
      unassign(e);
      if (!keep_going) return false;
    }
    return true;
  }

 private:
  bool reaches(Vertex from, Vertex target) {
    if (from == target) return true;
    ++epoch_;
    stack_.clear();
    stack_.push_back(from);
    stamp_[from] = epoch_;
    while (!stack_.empty()) {
      Vertex v = stack_.back();
      stack_.pop_back();
      for (Vertex w : out_[v]) {
        if (w == target) return true;
        if (stamp_[w] != epoch_) {
          stamp_[w] = epoch_;
          stack_.push_back(w);
        }
      }
    }
    return false;
  }

  const PolytopeGraph& g_;
  const std::vector<std::size_t>& order_;
  Heads heads_;
  std::vector<std::vector<Vertex>> out_;
  std::vector<std::uint32_t> stamp_;
  std::uint32_t epoch_ = 0;
  std::vector<Vertex> stack_;
};

/// Runs `leaf(acc, heads)` over every acyclic orientation. The first few
/// edges of the order are fixed per task; tasks are handed to `jobs` workers
/// and their accumulators come back in sequential enumeration order.
template <class Acc, class Leaf>
std::vector<Acc> partitioned(const PolytopeGraph& g, std::uint64_t budget, unsigned jobs, Leaf leaf) {
  check_budget(g, budget);
  const auto order = bfs_edge_order(g);
  const std::size_t m = order.size();
  std::size_t depth = 0;
  if (jobs > 1) {
    while (depth < m && (std::size_t{1} << depth) < 8u * jobs) ++depth;
  }

  std::vector<Heads> prefixes;
  {
    OrientationWalker walker(g, order);
    auto record = [&](const Heads& heads) {
      prefixes.push_back(heads);
      return true;
    };
    walker.walk(0, depth, record);
  }

  std::vector<Acc> results(prefixes.size());
  auto run_task = [&](std::size_t task) {
    OrientationWalker walker(g, order);
    for (std::size_t pos = 0; pos < depth; ++pos) walker.assign(order[pos], prefixes[task][order[pos]]);
    Acc& acc = results[task];
    auto visit = [&](const Heads& heads) { return leaf(acc, heads); };
    walker.walk(depth, m, visit);
  };

  if (jobs <= 1 || prefixes.size() <= 1) {
    for (std::size_t t = 0; t < prefixes.size(); ++t) run_task(t);
    return results;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(jobs);
  std::vector<std::thread> workers;
  for (unsigned w = 0; w < jobs; ++w) {
    workers.emplace_back([&, w] {
      try {
        for (std::size_t t = next++; t < prefixes.size(); t = next++) run_task(t);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& worker : workers) worker.join();
  for (auto& error : errors)
    if (error) std::rethrow_exception(error);
  return results;
}

HVector histogram_of(const PolytopeGraph& g, const Heads& heads, std::vector<int>& indeg) {
  std::fill(indeg.begin(), indeg.end(), 0);
  for (std::size_t e = 0; e < heads.size(); ++e) {
    const Edge& edge = g.edge(e);
    ++indeg[heads[e] ? edge.v : edge.u];
  }
  HVector h;
  h.counts.assign(g.dim() + 1, 0);
  for (int deg : indeg) ++h.counts[deg];
  return h;
}

void check_frame_k(const PolytopeGraph& g, int k) {
  if (k < 2 || k > g.dim() - 1) {
    throw Error(ErrorCode::KOutOfRange, "k=" + std::to_string(k) + " outside 2..d-1");
  }
}

/// Exact cover over k-frames. Candidates stay "live" while none of their
/// frames is covered; live[f] counts the live candidates containing frame f.
class FrameCover {
 public:
  FrameCover(const PolytopeGraph& g, int k, std::vector<VertexSet> candidates)
      : g_(g), k_(k), index_(g, k), candidates_(std::move(candidates)) {
    frames_of_.resize(candidates_.size());
    holders_.resize(index_.size());
    for (std::size_t c = 0; c < candidates_.size(); ++c) {
      const auto& set = candidates_[c];
      for (Vertex v : set) {
        std::uint32_t mask = 0;
        auto nbrs = g.neighbors(v);
        for (std::size_t p = 0; p < nbrs.size(); ++p)
          if (std::binary_search(set.begin(), set.end(), nbrs[p])) mask |= 1u << p;
        std::size_t f = *index_.find(v, mask);
        frames_of_[c].push_back(f);
        holders_[f].push_back(c);
      }
    }
    covered_.assign(index_.size(), 0);
    blocked_.assign(candidates_.size(), 0);
    live_.resize(index_.size());
    for (std::size_t f = 0; f < index_.size(); ++f) live_[f] = static_cast<int>(holders_[f].size());
    uncovered_ = index_.size();
  }

  /// Uncovered frame with fewest live candidates, or nullopt when all are covered.
  std::optional<std::size_t> pick_frame() const {
    std::optional<std::size_t> best;
    for (std::size_t f = 0; f < covered_.size(); ++f) {
      if (covered_[f]) continue;
      if (!best || live_[f] < live_[*best]) best = f;
      if (live_[*best] == 0) break;
    }
    return best;
  }

  std::vector<std::size_t> live_holders(std::size_t f) const {
    std::vector<std::size_t> out;
    for (std::size_t c : holders_[f])
      if (blocked_[c] == 0) out.push_back(c);
    return out;
  }

  void select(std::size_t c) {
    for (std::size_t f : frames_of_[c]) {
      covered_[f] = 1;
      --uncovered_;
      for (std::size_t other : holders_[f]) {
        if (blocked_[other]++ == 0) {
          for (std::size_t g2 : frames_of_[other]) --live_[g2];
        }
      }
    }
    chosen_.push_back(c);
  }

  void deselect(std::size_t c) {
    chosen_.pop_back();
    for (auto it = frames_of_[c].rbegin(); it != frames_of_[c].rend(); ++it) {
      for (std::size_t other : holders_[*it]) {
        if (--blocked_[other] == 0) {
          for (std::size_t g2 : frames_of_[other]) ++live_[g2];
        }
      }
      covered_[*it] = 0;
      ++uncovered_;
    }
  }

  /// Returns false when the sink asks to stop.
  template <class Sink>
  bool search(Sink& sink) {
    auto frame = pick_frame();
    if (!frame) return sink(solution());
    if (live_[*frame] == 0) return true;
    for (std::size_t c : live_holders(*frame)) {
      select(c);
      bool keep_going = search(sink);
      deselect(c);
      if (!keep_going) return false;
    }
    return true;
  }

  SetSystem solution() const {
    std::vector<VertexSet> sets;
    for (std::size_t c : chosen_) sets.push_back(candidates_[c]);
    SetSystem system(g_.fingerprint(), k_, std::move(sets));
    if (!validate_k_system(g_, system).valid) {
      throw std::logic_error("exact cover produced an invalid k-system");
    }
    return system;
  }

  std::size_t candidate_count() const noexcept { return candidates_.size(); }

 private:
  const PolytopeGraph& g_;
  int k_;
  FrameIndex index_;
  std::vector<VertexSet> candidates_;
  std::vector<std::vector<std::size_t>> frames_of_;
  std::vector<std::vector<std::size_t>> holders_;
  std::vector<char> covered_;
  std::vector<int> blocked_;
  std::vector<int> live_;
  std::vector<std::size_t> chosen_;
  std::size_t uncovered_ = 0;
};

class CandidateGrower {
 public:
  CandidateGrower(const PolytopeGraph& g, int k, std::size_t cap)
      : g_(g), k_(k), cap_(cap), status_(g.num_vertices(), kUndecided) {}

  std::vector<VertexSet> run() {
    const int n = g_.num_vertices();
    for (Vertex anchor = 0; anchor < n; ++anchor) {
      std::fill(status_.begin(), status_.end(), kUndecided);
      for (Vertex v = 0; v < anchor; ++v) status_[v] = kOut;
      status_[anchor] = kIn;
      grow();
    }
    return std::vector<VertexSet>(found_.begin(), found_.end());
  }

 private:
  static constexpr char kUndecided = 0;
  static constexpr char kIn = 1;
  static constexpr char kOut = 2;

  void count(Vertex v, int& in, int& undecided) const {
    in = undecided = 0;
    for (Vertex w : g_.neighbors(v)) {
      if (status_[w] == kIn) ++in;
      else if (status_[w] == kUndecided) ++undecided;
    }
  }

  bool feasible() const {
    for (Vertex v = 0; v < g_.num_vertices(); ++v) {
      if (status_[v] != kIn) continue;
      int in = 0, undecided = 0;
      count(v, in, undecided);
      if (in > k_ || in + undecided < k_) return false;
    }
    return true;
  }

  void grow() {
    Vertex open = -1;
    for (Vertex v = 0; v < g_.num_vertices() && open < 0; ++v) {
      if (status_[v] != kIn) continue;
      for (Vertex w : g_.neighbors(v))
        if (status_[w] == kUndecided) {
          open = v;
          break;
        }
    }
    if (open < 0) {
      VertexSet set;
      for (Vertex v = 0; v < g_.num_vertices(); ++v)
        if (status_[v] == kIn) set.push_back(v);
      if (induces_regular(g_, set, k_)) {
        found_.insert(std::move(set));
        if (found_.size() > cap_) {
          throw Error(ErrorCode::CandidateCapExceeded, "more than " + std::to_string(cap_) + " candidates");
        }
      }
      return;
    }
    int in = 0, undecided = 0;
    count(open, in, undecided);
    const int need = k_ - in;
    if (need < 0 || need > undecided) return;
    std::vector<Vertex> pending;
    for (Vertex w : g_.neighbors(open))
      if (status_[w] == kUndecided) pending.push_back(w);
    const auto width = static_cast<std::uint32_t>(pending.size());
    for (std::uint32_t pick = 0; pick < (1u << width); ++pick) {
      if (std::popcount(pick) != need) continue;
      for (std::uint32_t i = 0; i < width; ++i) status_[pending[i]] = (pick >> i) & 1 ? kIn : kOut;
      if (feasible()) grow();
      for (Vertex w : pending) status_[w] = kUndecided;
    }
  }

  const PolytopeGraph& g_;
  int k_;
  std::size_t cap_;
  std::vector<char> status_;
  std::set<VertexSet> found_;
};

}  // namespace

std::vector<std::size_t> bfs_edge_order(const PolytopeGraph& g) {
  std::vector<std::size_t> order;
  std::vector<char> placed(g.num_edges(), 0);
  std::vector<char> seen(g.num_vertices(), 0);
  std::vector<Vertex> queue{0};
  seen[0] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex v = queue[head];
    auto nbrs = g.neighbors(v);
    auto inc = g.incident_edges(v);
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      if (!seen[nbrs[i]]) {
        seen[nbrs[i]] = 1;
        queue.push_back(nbrs[i]);
      }
    }
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      if (!placed[inc[i]]) {
        placed[inc[i]] = 1;
        order.push_back(inc[i]);
      }
    }
  }
  return order;
}

void enumerate_acyclic_orientations(const PolytopeGraph& g, std::uint64_t budget,
                                    const std::function<bool(const Orientation&)>& visit) {
  check_budget(g, budget);
  const auto order = bfs_edge_order(g);
  OrientationWalker walker(g, order);
  auto leaf = [&](const Heads& heads) { return visit(Orientation(g.fingerprint(), heads)); };
  walker.walk(0, order.size(), leaf);
}

std::vector<Orientation> collect_acyclic_orientations(const PolytopeGraph& g, std::uint64_t budget, unsigned jobs) {
  auto parts = partitioned<std::vector<Orientation>>(g, budget, jobs, [&](auto& acc, const Heads& heads) {
    acc.emplace_back(g.fingerprint(), heads);
    return true;
  });
  std::vector<Orientation> all;
  for (auto& part : parts) std::move(part.begin(), part.end(), std::back_inserter(all));
  return all;
}

std::uint64_t count_acyclic_orientations(const PolytopeGraph& g, std::uint64_t budget, unsigned jobs) {
  auto parts = partitioned<std::uint64_t>(g, budget, jobs, [](std::uint64_t& acc, const Heads&) {
    ++acc;
    return true;
  });
  std::uint64_t total = 0;
  for (auto c : parts) total += c;
  return total;
}

HkMinimum minimize_hk(const PolytopeGraph& g, int k, std::uint64_t budget, unsigned jobs) {
  if (k != kAllFaces && (k < 0 || k > g.dim())) {
    throw Error(ErrorCode::KOutOfRange, "k=" + std::to_string(k));
  }
  struct Best {
    std::int64_t value = std::numeric_limits<std::int64_t>::max();
    Heads witness;
    std::uint64_t count = 0;
    std::vector<int> scratch;
  };
  auto parts = partitioned<Best>(g, budget, jobs, [&](Best& acc, const Heads& heads) {
    acc.scratch.resize(g.num_vertices());
    std::int64_t value = hk_sum(histogram_of(g, heads, acc.scratch), k);
    if (value < acc.value) {
      acc.value = value;
      acc.witness = heads;
      acc.count = 0;
    }
    if (value == acc.value) ++acc.count;
    return true;
  });
  HkMinimum result;
  result.k = k;
  result.value = std::numeric_limits<std::int64_t>::max();
  for (const Best& part : parts) {
    if (part.count == 0) continue;
    if (part.value < result.value) {
      result.value = part.value;
      result.witness = Orientation(g.fingerprint(), part.witness);
      result.minimizers = 0;
    }
    if (part.value == result.value) result.minimizers += part.count;
  }
  return result;
}

std::vector<VertexSet> regular_candidates(const PolytopeGraph& g, int k, std::size_t candidate_cap) {
  check_frame_k(g, k);
  return CandidateGrower(g, k, candidate_cap).run();
}

bool enumerate_k_systems(const PolytopeGraph& g, int k, std::size_t candidate_cap, std::size_t count_cap,
                         const std::function<bool(const SetSystem&)>& visit) {
  FrameCover cover(g, k, regular_candidates(g, k, candidate_cap));
  std::size_t emitted = 0;
  bool capped = false;
  auto sink = [&](const SetSystem& s) {
    if (emitted == count_cap) {
      capped = true;
      return false;
    }
    ++emitted;
    return visit(s);
  };
  return cover.search(sink) && !capped;
}

KSystemSearch collect_k_systems(const PolytopeGraph& g, int k, std::size_t candidate_cap, std::size_t count_cap,
                                unsigned jobs) {
  KSystemSearch result;
  auto candidates = regular_candidates(g, k, candidate_cap);
  result.candidates = candidates.size();
  FrameCover root(g, k, std::move(candidates));

  // One task per live candidate of the first branching frame; each task
  // keeps at most count_cap + 1 systems so truncation is detectable.
  auto first = root.pick_frame();
  std::vector<std::size_t> branches = first ? root.live_holders(*first) : std::vector<std::size_t>{};
  auto run_branch = [&](FrameCover& cover, std::vector<SetSystem>& out) {
    auto sink = [&](const SetSystem& s) {
      out.push_back(s);
      return out.size() <= count_cap;
    };
    cover.search(sink);
  };

  std::vector<std::vector<SetSystem>> parts;
  if (!first) {
    parts.emplace_back();
    run_branch(root, parts.back());
  } else if (jobs <= 1 || branches.size() <= 1) {
    parts.emplace_back();
    run_branch(root, parts.back());
  } else {
    parts.resize(branches.size());
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(jobs);
    std::vector<std::thread> workers;
    for (unsigned w = 0; w < jobs; ++w) {
      workers.emplace_back([&, w] {
        try {
          for (std::size_t t = next++; t < branches.size(); t = next++) {
            FrameCover cover = root;
            cover.select(branches[t]);
            run_branch(cover, parts[t]);
          }
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (auto& worker : workers) worker.join();
    for (auto& error : errors)
      if (error) std::rethrow_exception(error);
  }
  for (auto& part : parts) {
    for (auto& s : part) {
      if (result.systems.size() == count_cap) {
        result.truncated = true;
        break;
      }
      result.systems.push_back(std::move(s));
    }
    if (result.truncated) break;
  }
  return result;
}

MaxKSystem max_k_system(const PolytopeGraph& g, int k, std::size_t candidate_cap, std::size_t count_cap,
                        unsigned jobs) {
  auto search = collect_k_systems(g, k, candidate_cap, count_cap, jobs);
  if (search.systems.empty()) {
    throw Error(ErrorCode::InvalidParams, "graph admits no " + std::to_string(k) + "-system");
  }
  MaxKSystem result;
  result.systems_seen = search.systems.size();
  result.exhaustive = !search.truncated;
  const SetSystem* best = &search.systems.front();
  for (const auto& s : search.systems)
    if (s.size() > best->size()) best = &s;
  result.system = *best;
  return result;
}

std::optional<Orientation> search_k_sink_counterexample(const Instance& inst, int k, std::uint64_t budget,
                                                        unsigned jobs) {
  const PolytopeGraph& g = inst.graph;
  check_frame_k(g, k);
  const SetSystem faces = faces_from_incidence(inst, k);
  const AofOracle is_aof(inst);
  auto parts = partitioned<std::optional<Orientation>>(g, budget, jobs, [&](auto& acc, const Heads& heads) {
    Orientation o(g.fingerprint(), heads);
    for (const auto& face : faces.sets())
      if (count_sinks_unchecked(g, o, face) != 1) return true;
    if (is_aof(o)) return true;
    acc = std::move(o);
    return false;
  });
  for (auto& part : parts)
    if (part) return part;
  return std::nullopt;
}

}  // namespace ksys
