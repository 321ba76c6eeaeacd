#include <gtest/gtest.h>

#include <set>

#include "fixtures.hpp"
#include "ksys/certificates.hpp"
#include "ksys/error.hpp"
#include "ksys/search.hpp"

namespace ksys {
namespace {

Instance prism() { return make_product(make_cube(1), make_simplex(2)); }

PolytopeGraph triangle() { return validate_graph(2, 3, {{0, 1}, {1, 2}, {0, 2}}); }

std::uint64_t brute_acyclic(const PolytopeGraph& g) {
  std::uint64_t count = 0;
  auto edges = testing::edge_list(g);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << edges.size()); ++mask)
    count += testing::bitmask_acyclic(g.num_vertices(), edges, mask);
  return count;
}

TEST(BfsEdgeOrder, IsAPermutation) {
  auto g = make_fig1().graph;
  auto order = bfs_edge_order(g);
  std::set<std::size_t> distinct(order.begin(), order.end());
  EXPECT_EQ(order.size(), g.num_edges());
  EXPECT_EQ(distinct.size(), g.num_edges());
}

TEST(EnumerateAcyclicOrientations, SmallCounts) {
  EXPECT_EQ(count_acyclic_orientations(triangle(), kDefaultBudget), 6u);
  EXPECT_EQ(count_acyclic_orientations(make_cube(2).graph, kDefaultBudget), 14u);
  EXPECT_EQ(count_acyclic_orientations(make_simplex(3).graph, kDefaultBudget), 24u);
}

// 1862 was computed independently by a Python deletion-contraction run and
// by a full 2^12 sweep; both oracles are repeated here in C++.
TEST(EnumerateAcyclicOrientations, CubeMatchesChromaticPolynomial) {
  auto g = make_cube(3).graph;
  auto dc = testing::acyclic_count_deletion_contraction(testing::edge_list(g));
  EXPECT_EQ(dc, 1862u);
  EXPECT_EQ(brute_acyclic(g), 1862u);
  EXPECT_EQ(count_acyclic_orientations(g, kDefaultBudget), 1862u);
}

TEST(EnumerateAcyclicOrientations, DistinctAcyclicAndComplete) {
  for (const auto& inst : {make_cube(3), prism(), make_simplex(4)}) {
    const auto& g = inst.graph;
    std::set<Orientation> seen;
    enumerate_acyclic_orientations(g, kDefaultBudget, [&](const Orientation& o) {
      EXPECT_TRUE(topological_order(g, o).acyclic());
      EXPECT_TRUE(seen.insert(o).second);
      return true;
    });
    EXPECT_EQ(seen.size(), brute_acyclic(g)) << inst.name;
    EXPECT_EQ(seen.size(), testing::acyclic_count_deletion_contraction(testing::edge_list(g))) << inst.name;
  }
}

TEST(EnumerateAcyclicOrientations, VisitorCanStop) {
  std::size_t seen = 0;
  enumerate_acyclic_orientations(make_cube(3).graph, kDefaultBudget, [&](const Orientation&) { return ++seen < 5; });
  EXPECT_EQ(seen, 5u);
}

TEST(EnumerateAcyclicOrientations, BudgetExceeded) {
  try {
    count_acyclic_orientations(make_cube(3).graph, 4095);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::BudgetExceeded);
  }
  EXPECT_THROW(count_acyclic_orientations(make_cube(4).graph, kDefaultBudget), Error);
}

TEST(EnumerateAcyclicOrientations, ParallelMatchesSequential) {
  auto g = make_fig1().graph;
  auto sequential = collect_acyclic_orientations(g, kDefaultBudget, 1);
  auto parallel = collect_acyclic_orientations(g, kDefaultBudget, 4);
  EXPECT_EQ(sequential.size(), 95136u);
  EXPECT_EQ(sequential, parallel);
  std::vector<Orientation> visited;
  enumerate_acyclic_orientations(g, kDefaultBudget, [&](const Orientation& o) {
    visited.push_back(o);
    return true;
  });
  EXPECT_EQ(visited, sequential);
}

TEST(MinimizeHk, CubeValues) {
  auto g = make_cube(3).graph;
  auto all = minimize_hk(g, kAllFaces);
  EXPECT_EQ(all.value, 27);
  EXPECT_EQ(all.minimizers, 728u);
  EXPECT_TRUE(is_aof_oracle(make_cube(3), all.witness));
  auto two = minimize_hk(g, 2);
  EXPECT_EQ(two.value, 6);
  EXPECT_EQ(two.minimizers, 728u);
  EXPECT_EQ(minimize_hk(g, 2, kDefaultBudget, 3).witness, two.witness);
  EXPECT_EQ(minimize_hk(g, 1).value, 12);
  EXPECT_THROW(minimize_hk(g, 5), Error);
}

TEST(MinimizeHk, Fig1TwoFaces) {
  auto fig1 = make_fig1();
  auto two = minimize_hk(fig1.graph, 2, kDefaultBudget, 4);
  EXPECT_EQ(two.value, 8);
  EXPECT_EQ(two.minimizers, 7972u);
  EXPECT_TRUE(is_aof_oracle(fig1, two.witness));
}

TEST(RegularCandidates, MatchBruteForceSubsets) {
  std::vector<Instance> instances{make_cube(3), make_fig1(), prism(), make_simplex(4), make_cube(4)};
  for (const auto& inst : instances) {
    const auto& g = inst.graph;
    for (int k = 2; k <= g.dim() - 1; ++k) {
      auto expected = testing::regular_subsets(g.num_vertices(), testing::edge_list(g), k);
      auto got = regular_candidates(g, k, kDefaultCandidateCap);
      EXPECT_EQ(std::set<std::vector<int>>(got.begin(), got.end()), expected) << inst.name << " k=" << k;
      EXPECT_TRUE(std::is_sorted(got.begin(), got.end()));
    }
  }
  EXPECT_EQ(regular_candidates(make_cube(3).graph, 2, kDefaultCandidateCap).size(), 10u);
  EXPECT_EQ(regular_candidates(make_fig1().graph, 2, kDefaultCandidateCap).size(), 18u);
}

TEST(RegularCandidates, CapIsEnforced) {
  try {
    regular_candidates(make_fig1().graph, 2, 5);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::CandidateCapExceeded);
  }
}

// Exact-cover results against a naive sweep over all subfamilies of the
// candidate list (2^10 for the cube, 2^18 for fig1).
TEST(EnumerateKSystems, MatchesSubfamilySweep) {
  for (const auto& inst : {make_cube(3), make_fig1(), prism()}) {
    const auto& g = inst.graph;
    auto candidates = regular_candidates(g, 2, kDefaultCandidateCap);
    std::set<std::vector<VertexSet>> expected;
    for (std::uint32_t pick = 1; pick < (1u << candidates.size()); ++pick) {
      std::vector<VertexSet> sets;
      std::int64_t total = 0;
      for (std::size_t i = 0; i < candidates.size(); ++i)
        if ((pick >> i) & 1) {
          sets.push_back(candidates[i]);
          total += static_cast<std::int64_t>(candidates[i].size());
        }
      if (total != g.num_vertices() * binomial(g.dim(), 2)) continue;
      SetSystem s(g.fingerprint(), 2, sets);
      if (validate_k_system(g, s).valid) expected.insert(std::vector<VertexSet>(s.sets().begin(), s.sets().end()));
    }
    auto found = collect_k_systems(g, 2);
    EXPECT_FALSE(found.truncated);
    std::set<std::vector<VertexSet>> got;
    for (const auto& s : found.systems) {
      EXPECT_EQ(s.size_sum(), g.num_vertices() * binomial(g.dim(), 2));
      got.insert(std::vector<VertexSet>(s.sets().begin(), s.sets().end()));
    }
    EXPECT_EQ(got.size(), found.systems.size());
    EXPECT_EQ(got, expected) << inst.name;
  }
}

TEST(EnumerateKSystems, Examples) {
  auto cube = make_cube(3);
  auto cube_systems = collect_k_systems(cube.graph, 2);
  EXPECT_EQ(cube_systems.systems.size(), 2u);
  EXPECT_EQ(cube_systems.candidates, 10u);

  auto fig1 = make_fig1();
  auto f2 = faces_from_incidence(fig1, 2);
  auto fig1_systems = collect_k_systems(fig1.graph, 2).systems;
  ASSERT_EQ(fig1_systems.size(), 3u);
  std::size_t non_face = 0;
  for (const auto& s : fig1_systems) {
    if (s == f2) continue;
    ++non_face;
    EXPECT_LE(s.size(), 7u);
  }
  EXPECT_EQ(non_face, 2u);

  auto k4 = make_simplex(3);
  auto k4_systems = collect_k_systems(k4.graph, 2).systems;
  ASSERT_EQ(k4_systems.size(), 1u);
  EXPECT_EQ(k4_systems[0], faces_from_incidence(k4, 2));
  EXPECT_EQ(k4_systems[0].size_sum(), 12);
}

TEST(EnumerateKSystems, CountCapAndParallelOrder) {
  auto fig1 = make_fig1();
  auto capped = collect_k_systems(fig1.graph, 2, kDefaultCandidateCap, 1);
  EXPECT_EQ(capped.systems.size(), 1u);
  EXPECT_TRUE(capped.truncated);
  auto sequential = collect_k_systems(fig1.graph, 2, kDefaultCandidateCap, kDefaultCountCap, 1);
  auto parallel = collect_k_systems(fig1.graph, 2, kDefaultCandidateCap, kDefaultCountCap, 4);
  EXPECT_EQ(sequential.systems, parallel.systems);

  std::vector<SetSystem> streamed;
  bool complete = enumerate_k_systems(fig1.graph, 2, kDefaultCandidateCap, kDefaultCountCap, [&](const SetSystem& s) {
    streamed.push_back(s);
    return true;
  });
  EXPECT_TRUE(complete);
  EXPECT_EQ(streamed, sequential.systems);
  EXPECT_FALSE(enumerate_k_systems(fig1.graph, 2, kDefaultCandidateCap, 2, [](const SetSystem&) { return true; }));
}

TEST(MaxKSystem, EqualsOracleFaces) {
  struct Case {
    Instance inst;
    int k;
  };
  std::vector<Case> cases{{make_cube(3), 2}, {make_fig1(), 2}, {make_simplex(4), 3}, {make_simplex(4), 2},
                          {make_simplex(3), 2}, {prism(), 2}, {make_cube(4), 3}};
  for (const auto& [inst, k] : cases) {
    auto best = max_k_system(inst.graph, k);
    EXPECT_TRUE(best.exhaustive);
    EXPECT_EQ(best.system, faces_from_incidence(inst, k)) << inst.name << " k=" << k;
  }
  EXPECT_EQ(max_k_system(make_simplex(4).graph, 3).system.size(), 5u);
}

TEST(KSinkCounterexample, KOutOfRangeAndBudget) {
  EXPECT_THROW(search_k_sink_counterexample(make_cube(3), 3), Error);
  try {
    search_k_sink_counterexample(make_cube(4), 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::BudgetExceeded);
  }
}

// On the 4-simplex every acyclic orientation is an AOF, so nothing exists.
TEST(KSinkCounterexample, NoneOnSimplex) {
  EXPECT_FALSE(search_k_sink_counterexample(make_simplex(4), 3).has_value());
}

TEST(KSinkCounterexample, FoundOnesAreGenuine) {
  auto inst = make_product(make_cube(1), make_simplex(3));
  auto found = search_k_sink_counterexample(inst, 3, kDefaultBudget, 4);
  ASSERT_TRUE(found.has_value());
  EXPECT_TRUE(unique_sink_per_set(inst.graph, *found, faces_from_incidence(inst, 3)).unique);
  EXPECT_FALSE(is_aof_oracle(inst, *found));
}

}  // namespace
}  // namespace ksys
