#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "ksys/error.hpp"
#include "ksys/io.hpp"

namespace ksys {
namespace {

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no Error thrown";
  return ErrorCode::NotRegular;
}

TEST(Io, GraphDocumentIsCanonical) {
  auto g = make_simplex(3).graph;
  EXPECT_EQ(io::to_json(g), R"({"d":3,"edges":[[0,1],[0,2],[0,3],[1,2],[1,3],[2,3]],"n":4})");
  auto shuffled = io::graph_from_json(R"({"n":4,"d":3,"edges":[[3,2],[0,1],[2,0],[1,2],[3,1],[0,3]]})");
  EXPECT_EQ(io::to_json(shuffled), io::to_json(g));
  EXPECT_EQ(shuffled.fingerprint(), g.fingerprint());
}

TEST(Io, OrientationAndSetSystemDocuments) {
  auto cube = make_cube(3);
  auto o = geometric_aof(cube, testing::weights({1, 2, 4}));
  auto text = io::to_json(o);
  EXPECT_EQ(text, R"({"graph_fingerprint":")" + cube.graph.fingerprint() + R"(","heads":[1,1,1,1,1,1,1,1,1,1,1,1]})");
  EXPECT_EQ(io::orientation_from_json(text), o);

  auto f2 = faces_from_incidence(cube, 2);
  auto doc = io::to_json(f2);
  EXPECT_NE(doc.find(R"("sets":[[0,1,2,3],[0,1,4,5],[0,2,4,6],[1,3,5,7],[2,3,6,7],[4,5,6,7]])"), std::string::npos);
  EXPECT_EQ(io::set_system_from_json(doc), f2);
}

// Round trip on every generated document type: parse(print(x)) prints to
// the same bytes.
TEST(Io, CanonicalRoundTrips) {
  std::mt19937 rng(3);
  std::vector<Instance> instances{make_simplex(4), make_cube(3), make_fig1(),
                                  make_product(make_cube(1), make_simplex(2))};
  for (const auto& inst : instances) {
    auto text = io::to_json(inst);
    auto back = io::instance_from_json(text);
    EXPECT_EQ(io::to_json(back), text) << inst.name;
    EXPECT_EQ(back.graph.fingerprint(), inst.graph.fingerprint());

    std::vector<std::uint8_t> heads(inst.graph.num_edges());
    for (auto& h : heads) h = rng() & 1;
    Orientation o(inst.graph.fingerprint(), heads);
    EXPECT_EQ(io::to_json(io::orientation_from_json(io::to_json(o))), io::to_json(o));

    auto f2 = faces_from_incidence(inst, 2);
    FaceCertificate fc{2, f2, o};
    auto fc_text = io::to_json(fc);
    auto fc_back = io::face_certificate_from_json(fc_text);
    EXPECT_EQ(io::to_json(fc_back), fc_text);
    EXPECT_EQ(fc_back.claimed_sets, f2);
    EXPECT_EQ(io::certificate_type(fc_text), "faces");

    AofCertificate ac{o, f2};
    auto ac_text = io::to_json(ac);
    EXPECT_EQ(io::to_json(io::aof_certificate_from_json(ac_text)), ac_text);
    EXPECT_EQ(io::certificate_type(ac_text), "aof");
  }
}

TEST(Io, RationalCoordinates) {
  auto text = io::to_json(make_cube(2));
  EXPECT_NE(text.find(R"("coords":[[["0","1"],["0","1"]],[["1","1"],["0","1"]])"), std::string::npos);
  EXPECT_EQ(io::parse_rational("-6/4"), Rational(-3, 2));
  EXPECT_EQ(io::parse_rational("7"), Rational(7));
  EXPECT_EQ(code_of([] { io::parse_rational("1/0"); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { io::parse_rational("x"); }), ErrorCode::ParseError);
}

TEST(Io, HVectorText) {
  HVector h{{1, 3, 3, 1}};
  EXPECT_EQ(io::to_text(h), "1 3 3 1");
  EXPECT_EQ(io::hvector_from_text("1 3 3 1\n"), h);
  EXPECT_EQ(io::hvector_from_text("[1,3,3,1]"), h);
  EXPECT_EQ(code_of([] { io::hvector_from_text("1 x"); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { io::hvector_from_text(""); }), ErrorCode::ParseError);
}

TEST(Io, MalformedDocuments) {
  EXPECT_EQ(code_of([] { io::graph_from_json("{"); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { io::graph_from_json(R"({"d":3,"n":4})"); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { io::graph_from_json(R"({"d":3,"n":4,"edges":[[0,1,2]]})"); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { io::graph_from_json(R"({"d":2,"n":3,"edges":[[0,1],[1,2]]})"); }), ErrorCode::NotRegular);
  EXPECT_EQ(code_of([] { io::orientation_from_json(R"({"graph_fingerprint":"ab","heads":[0,2]})"); }),
            ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { io::set_system_from_json(R"({"graph_fingerprint":"ab","k":2,"sets":[[0,1,2],[2,1,0]]})"); }),
            ErrorCode::DuplicateSet);
  EXPECT_EQ(code_of([] { io::face_certificate_from_json(R"({"type":"aof"})"); }), ErrorCode::ParseError);
}

}  // namespace
}  // namespace ksys
