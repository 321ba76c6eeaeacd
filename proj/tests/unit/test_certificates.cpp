#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "ksys/certificates.hpp"
#include "ksys/error.hpp"
#include "ksys/oracle.hpp"
#include "ksys/search.hpp"

namespace ksys {
namespace {

const VertexSet kCubeHexagon{1, 2, 3, 4, 5, 6};

Instance prism() { return make_product(make_cube(1), make_simplex(2)); }

SetSystem replace_first(const SetSystem& s, VertexSet replacement) {
  std::vector<VertexSet> sets(s.sets().begin() + 1, s.sets().end());
  sets.push_back(std::move(replacement));
  return SetSystem(s.graph_fingerprint(), s.k(), std::move(sets));
}

TEST(UniqueSinkPerSet, Examples) {
  auto cube = make_cube(3);
  auto f2 = faces_from_incidence(cube, 2);
  auto aof = geometric_aof(cube, testing::weights({1, 2, 4}));
  EXPECT_TRUE(unique_sink_per_set(cube.graph, aof, f2).unique);

  auto two = testing::two_sink_cube(cube.graph);
  auto result = unique_sink_per_set(cube.graph, two, f2);
  EXPECT_FALSE(result.unique);
  ASSERT_TRUE(result.violating_set.has_value());
  EXPECT_GE(sinks_in_subset(cube.graph, two, f2[*result.violating_set]).size(), 2u);

  EXPECT_TRUE(unique_sink_per_set(cube.graph, aof, SetSystem(cube.graph.fingerprint(), 2, {})).unique);
}

TEST(UniqueSinkPerSet, RequiresAcyclic) {
  auto cube = make_cube(3);
  auto cyclic = testing::low_to_high(cube.graph).flipped(*cube.graph.find_edge(2, 3)).flipped(*cube.graph.find_edge(0, 2));
  try {
    unique_sink_per_set(cube.graph, cyclic, faces_from_incidence(cube, 2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotAcyclic);
  }
}

TEST(VerifyFaceCertificate, Examples) {
  auto cube = make_cube(3);
  auto f2 = faces_from_incidence(cube, 2);
  auto aof = geometric_aof(cube, testing::weights({1, 2, 4}));
  EXPECT_TRUE(verify_face_certificate(cube.graph, {2, f2, aof}).verified());

  auto simplex = make_simplex(3);
  auto tri = faces_from_incidence(simplex, 2);
  EXPECT_EQ(tri.size(), 4u);
  EXPECT_TRUE(verify_face_certificate(simplex.graph, {2, tri, testing::low_to_high(simplex.graph)}).verified());

  auto hex = verify_face_certificate(cube.graph, {2, replace_first(f2, kCubeHexagon), aof});
  EXPECT_FALSE(hex.verified());
  EXPECT_EQ(hex.reason, RefutationReason::NotKSystem);
}

TEST(VerifyFaceCertificate, EachCheckCanFail) {
  auto cube = make_cube(3);
  auto f2 = faces_from_incidence(cube, 2);
  auto cyclic = testing::low_to_high(cube.graph).flipped(*cube.graph.find_edge(2, 3)).flipped(*cube.graph.find_edge(0, 2));
  EXPECT_EQ(verify_face_certificate(cube.graph, {2, f2, cyclic}).reason, RefutationReason::NotAcyclic);
  auto two = testing::two_sink_cube(cube.graph);
  auto verdict = verify_face_certificate(cube.graph, {2, f2, two});
  EXPECT_EQ(verdict.reason, RefutationReason::CardinalityMismatch);
  EXPECT_NE(verdict.detail.find("|S|=6"), std::string::npos);
}

TEST(VerifyFaceCertificate, InputErrors) {
  auto cube = make_cube(3);
  auto f2 = faces_from_incidence(cube, 2);
  auto aof = geometric_aof(cube, testing::weights({1, 2, 4}));
  EXPECT_THROW(verify_face_certificate(cube.graph, {3, f2, aof}), Error);
  auto f1 = faces_from_incidence(cube, 1);
  try {
    verify_face_certificate(cube.graph, {1, f1, aof});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::KOutOfRange);
  }
  auto other = make_simplex(3);
  try {
    verify_face_certificate(other.graph, {2, f2, aof});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::FingerprintMismatch);
  }
}

TEST(VerifyLargerSystem, Examples) {
  auto fig1 = make_fig1();
  auto f2 = faces_from_incidence(fig1, 2);
  auto systems = collect_k_systems(fig1.graph, 2).systems;
  const SetSystem* other = nullptr;
  for (const auto& s : systems)
    if (!(s == f2)) other = &s;
  ASSERT_NE(other, nullptr);
  EXPECT_LE(other->size(), 7u);
  EXPECT_TRUE(verify_larger_system(fig1.graph, *other, f2).verified());

  auto same = verify_larger_system(fig1.graph, f2, f2);
  EXPECT_EQ(same.reason, RefutationReason::NotLarger);

  std::vector<VertexSet> padded(f2.sets().begin(), f2.sets().end());
  padded.push_back({0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11});
  auto bad = verify_larger_system(fig1.graph, *other, SetSystem(f2.graph_fingerprint(), 2, padded));
  EXPECT_EQ(bad.reason, RefutationReason::NotKSystem);

  auto f1 = SetSystem(f2.graph_fingerprint(), 1, {{0, 1}});
  try {
    verify_larger_system(fig1.graph, f2, f1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::KMismatch);
  }
}

TEST(VerifyAofCertificate, Examples) {
  auto cube = make_cube(3);
  auto f2 = faces_from_incidence(cube, 2);
  auto aof = geometric_aof(cube, testing::weights({1, 2, 4}));
  EXPECT_TRUE(verify_aof_certificate(cube.graph, {aof, f2}).verified());

  auto two = testing::two_sink_cube(cube.graph);
  auto verdict = verify_aof_certificate(cube.graph, {two, f2});
  EXPECT_EQ(verdict.reason, RefutationReason::CardinalityMismatch);
  EXPECT_GE(hk_sum(indegree_histogram(cube.graph, two), 2), 7);

  auto cyclic = testing::low_to_high(cube.graph).flipped(*cube.graph.find_edge(2, 3)).flipped(*cube.graph.find_edge(0, 2));
  EXPECT_EQ(verify_aof_certificate(cube.graph, {cyclic, f2}).reason, RefutationReason::NotAcyclic);

  // The four-hexagon 2-system of the cube is valid but too small for any
  // acyclic orientation: H^2 >= f_2 = 6 > 4.
  auto systems = collect_k_systems(cube.graph, 2).systems;
  ASSERT_EQ(systems.size(), 2u);
  const auto& hexagons = systems[0].size() == 4 ? systems[0] : systems[1];
  EXPECT_EQ(hexagons.size(), 4u);
  EXPECT_EQ(verify_aof_certificate(cube.graph, {aof, hexagons}).reason, RefutationReason::CardinalityMismatch);
}

TEST(VerifyAofCertificate, PolygonSpecialCaseAndSmallDimensions) {
  auto square = make_cube(2);
  auto aof = geometric_aof(square, testing::weights({1, 2}));
  SetSystem none(square.graph.fingerprint(), 2, {});
  EXPECT_TRUE(verify_aof_certificate(square.graph, {aof, none}).verified());
  // 0 -> 1, 0 -> 2, 3 -> 1, 3 -> 2: two sources, two sinks.
  std::vector<std::int64_t> value{0, 5, 6, 1};
  auto two = orient_toward_larger(square.graph, value);
  EXPECT_EQ(verify_aof_certificate(square.graph, {two, none}).reason, RefutationReason::MultipleSinks);

  auto segment = make_cube(1);
  try {
    verify_aof_certificate(segment.graph, {testing::low_to_high(segment.graph), SetSystem()});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DimensionTooSmall);
  }
}

TEST(VerifySmallerH2, Examples) {
  auto cube = make_cube(3);
  auto aof = geometric_aof(cube, testing::weights({1, 2, 4}));
  auto two = testing::two_sink_cube(cube.graph);
  EXPECT_TRUE(verify_smaller_h2(cube.graph, two, aof).verified());
  EXPECT_EQ(verify_smaller_h2(cube.graph, aof, two).reason, RefutationReason::NotSmaller);
  EXPECT_EQ(verify_smaller_h2(cube.graph, aof, aof).reason, RefutationReason::NotSmaller);
}

TEST(FacetsFrom2Faces, MatchesOracleFacets) {
  std::vector<Instance> instances{make_cube(3), make_cube(4), prism(), make_fig1(), make_simplex(4),
                                  make_product(make_simplex(2), make_simplex(2)), make_cube(5),
                                  truncate_vertex(make_cube(4), 5)};
  for (const auto& inst : instances) {
    auto f2 = faces_from_incidence(inst, 2);
    auto facets = facets_from_2faces(inst.graph, f2);
    EXPECT_EQ(facets, faces_from_incidence(inst, inst.dim() - 1)) << inst.name;
    if (inst.dim() == 3) EXPECT_EQ(facets, f2);
  }
  auto c4 = facets_from_2faces(make_cube(4).graph, faces_from_incidence(make_cube(4), 2));
  EXPECT_EQ(c4.size(), 8u);
  for (const auto& s : c4.sets()) EXPECT_EQ(s.size(), 8u);
}

TEST(FacetsFrom2Faces, RejectsCorruptedInput) {
  auto cube = make_cube(3);
  auto f2 = faces_from_incidence(cube, 2);
  try {
    facets_from_2faces(cube.graph, replace_first(f2, kCubeHexagon));
    FAIL();
  } catch (const Error& e) {
    EXPECT_TRUE(e.code() == ErrorCode::NotCycleSystem || e.code() == ErrorCode::InconsistentTransport);
  }
  try {
    facets_from_2faces(make_cube(2).graph, SetSystem(make_cube(2).graph.fingerprint(), 2, {}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DimensionTooSmall);
  }
}

// For d = 3 facets are the 2-faces themselves, so any 2-system of induced
// cycles reproduces itself; the transport has nothing to contradict.
TEST(FacetsFrom2Faces, ThreeDimensionalInputIsReturnedUnchanged) {
  auto cube = make_cube(3);
  for (const auto& s : collect_k_systems(cube.graph, 2).systems) {
    EXPECT_EQ(facets_from_2faces(cube.graph, s), s);
  }
}

}  // namespace
}  // namespace ksys
