#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace altknot;

namespace {

const char* trefoil = "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]";
const char* k8_13 = "X[16,7,1,8] X[8,1,9,2] X[2,14,3,13] X[12,4,13,3] X[4,12,5,11] X[14,6,15,5] X[6,9,7,10] X[10,16,11,15]";
const char* k8_14 = "X[9,1,10,16] X[1,11,2,10] X[13,3,14,2] X[3,7,4,6] X[15,4,16,5] X[5,14,6,15] X[7,13,8,12] X[11,9,12,8]";

}  // namespace

TEST(Parse, TrefoilIsReducedAlternatingKnot) {
  const Diagram d = parse_pd(trefoil);
  EXPECT_EQ(d.crossing_count(), 3);
  EXPECT_EQ(validate(d), (ValidationReport{true, true, 1}));
}

TEST(Parse, MarkedCrossing) {
  const MarkedDiagram d = parse_marked_pd(std::string(k8_13) + " @5");
  EXPECT_EQ(d.marked, 5);
  EXPECT_EQ(d.crossing_count(), 8);
}

TEST(Parse, Errors) {
  EXPECT_THROW(parse_pd(""), ParseError);
  EXPECT_THROW(parse_pd("X[1,2,3]"), ParseError);
  EXPECT_THROW(parse_pd("Y[1,2,3,4]"), ParseError);
  EXPECT_THROW(parse_pd("X[1,2,3,4] X[1,2,3,5]"), TopologyError);
  EXPECT_THROW(parse_marked_pd(std::string(trefoil) + " @3"), ParseError);
  EXPECT_THROW(parse_marked_pd(std::string(trefoil) + " @0 @1"), ParseError);
}

TEST(Parse, NugatoryRejectedUnlessAllowed) {
  EXPECT_THROW(parse_pd("X[1,2,2,1]"), TopologyError);
  const Diagram d = parse_pd("X[1,2,2,1]", ParseOptions{false});
  EXPECT_FALSE(validate(d).reduced);
}

TEST(Parse, LinkRejected) {
  // Hopf link
  EXPECT_THROW(parse_pd("X[4,1,3,2] X[2,3,1,4]"), ComponentError);
}

TEST(Parse, RoundTripThroughPd) {
  for (const auto& k : oracle::alternating_table(8)) {
    const Diagram again = parse_pd(to_pd(k.diagram));
    EXPECT_EQ(canonical_code(again), canonical_code(k.diagram)) << k.name;
  }
}

TEST(PlanarMap, EulerAndFaces) {
  for (const auto& k : oracle::alternating_table(8)) {
    const PlanarMap& m = k.diagram.map;
    EXPECT_TRUE(is_planar(m)) << k.name;
    EXPECT_EQ(compute_faces(m).count(), m.crossing_count() + 2) << k.name;
  }
}

TEST(Canonical, InvariantUnderRelabeling) {
  const Diagram d = parse_pd(k8_13);
  // Shift every edge label cyclically and reverse the crossing order.
  const PdCode pd = parse_pd_tokens(k8_13);
  std::string shifted;
  for (auto it = pd.crossings.rbegin(); it != pd.crossings.rend(); ++it) {
    shifted += "X[";
    for (int k = 0; k < 4; ++k) shifted += (k ? "," : "") + std::to_string((*it)[k] % 16 + 1);
    shifted += "] ";
  }
  EXPECT_EQ(canonical_code(parse_pd(shifted)), canonical_code(d));
}

TEST(Canonical, MarkDistinguishes) {
  const Diagram d = parse_pd(k8_13);
  EXPECT_NE(canonical_code(MarkedDiagram{d, 5}), canonical_code(MarkedDiagram{d, 6}));
  EXPECT_EQ(canonical_code(MarkedDiagram{d, 5}), canonical_code(canonical_form(MarkedDiagram{d, 5})));
}

TEST(Canonical, MirrorOfAmphichiralFigureEight) {
  const Diagram fig8 = oracle::alternating_table(4).back().diagram;
  EXPECT_EQ(canonical_code(mirror(fig8)), canonical_code(fig8));
  const Diagram t = parse_pd(trefoil);
  EXPECT_NE(canonical_code(mirror(t)), canonical_code(t));
}

TEST(Determinant, MatchesBracketOracleOnTable) {
  for (const auto& k : oracle::alternating_table(8))
    EXPECT_EQ(goeritz_determinant(k.diagram), oracle::bracket_determinant(k.diagram.map)) << k.name;
}

TEST(Determinant, KnownValues) {
  EXPECT_EQ(goeritz_determinant(parse_pd(trefoil)), 3);
  EXPECT_EQ(goeritz_determinant(parse_pd(k8_13)), 29);
  EXPECT_EQ(goeritz_determinant(parse_pd(k8_14)), 31);
}

TEST(Determinant, LinkThrows) {
  const Diagram hopf{map_from_pd({{4, 1, 3, 2}, {2, 3, 1, 4}})};
  EXPECT_THROW(goeritz_determinant(hopf), ComponentError);
}

TEST(Alternation, CrossingChangeBreaksIt) {
  const Diagram d = parse_pd(k8_14);
  for (int v = 0; v < 8; ++v) {
    const PlanarMap s = switch_vertex(d.map, v);
    EXPECT_FALSE(is_alternating(s));
    EXPECT_EQ(dealternator(s), v);
  }
  EXPECT_EQ(dealternator(d.map), -2);
}
