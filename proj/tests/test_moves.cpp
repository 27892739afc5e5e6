#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace altknot;

namespace {

const char* k8_13_at5 =
    "X[16,7,1,8] X[8,1,9,2] X[2,14,3,13] X[12,4,13,3] X[4,12,5,11] X[14,6,15,5] X[6,9,7,10] X[10,16,11,15] @5";

bool member_by_oracle(const MarkedDiagram& d) {
  return is_alternating(d.diagram.map) && is_reduced(d.diagram.map) &&
         oracle::jones_trivial(switch_vertex(d.diagram.map, d.marked));
}

}  // namespace

TEST(Reidemeister, FingerThenBigonRemovalIsIdentity) {
  const Diagram d = oracle::alternating_table(6).back().diagram;
  const PlanarMap& m = d.map;
  const Faces f = compute_faces(m);
  int checked = 0;
  for (const auto& face : f.darts)
    if (face.size() >= 3) {
      const PlanarMap y = apply_finger(m, Finger{face[0], face[1], true});
      EXPECT_EQ(y.crossing_count(), m.crossing_count() + 2);
      EXPECT_TRUE(is_planar(y));
      for (const Bigon& b : r2_sites(y))
        if (b.contains(m.vertex_count()) && b.contains(m.vertex_count() + 1)) {
          EXPECT_EQ(canonical_code(Diagram{apply_r2(y, b)}), canonical_code(d));
          ++checked;
        }
    }
  EXPECT_GT(checked, 0);
}

TEST(Reidemeister, ThirdMovePreservesBracket) {
  const MarkedDiagram d = parse_marked_pd(k8_13_at5);
  const PlanarMap w = switch_vertex(d.diagram.map, d.marked);
  const auto bracket = oracle::bracket(w);
  int checked = 0;
  for (const Triangle& t : r3_sites(w)) {
    const PlanarMap y = apply_r3(w, t);
    EXPECT_EQ(oracle::bracket(y), bracket);
    ++checked;
  }
  EXPECT_GT(checked, 0);
}

TEST(Flype, PreservesMembershipAndDeterminant) {
  for (const MarkedDiagram& d : enumerate_all_diagrams(8)) {
    const long long det = goeritz_determinant(d.diagram);
    for (const FlypeSite& s : find_flypes(d)) {
      const MarkedDiagram e = apply_flype(d, s);
      EXPECT_EQ(e.crossing_count(), d.crossing_count());
      EXPECT_EQ(goeritz_determinant(e.diagram), det);
      EXPECT_TRUE(member_by_oracle(e));
    }
  }
}

TEST(Flype, RefusesToCarryMarkedCrossing) {
  const MarkedDiagram d = parse_marked_pd(k8_13_at5);
  for (const FlypeSite& s : flype_sites(d.diagram.map, -1))
    if (s.crossing == d.marked) EXPECT_THROW(apply_flype(d, s), Error);
  for (const FlypeSite& s : find_flypes(d)) EXPECT_NE(s.crossing, d.marked);
}

TEST(Tongue, ResultsAreMembersTwoOrThreeCrossingsLarger) {
  for (const MarkedDiagram& seed : {clasp_diagram(1, 1), clasp_diagram(2, 1), parse_marked_pd(k8_13_at5)}) {
    const auto moves = tongue_moves(seed, seed.crossing_count() + 3);
    EXPECT_FALSE(moves.empty());
    for (const auto& [site, d] : moves) {
      const int delta = d.crossing_count() - seed.crossing_count();
      EXPECT_TRUE(delta == 2 || delta == 3);
      EXPECT_TRUE(member_by_oracle(d));
      EXPECT_EQ(canonical_code(apply_tongue(seed, site)), canonical_code(d));
    }
  }
}

TEST(Twirl, TangleIsRationalUnknottingTangle) {
  for (int v = 0; v < twirl_variant_count; ++v) {
    const Tangle t = twirl_tangle(v);
    EXPECT_EQ(t.crossing_count(), 4);
    EXPECT_TRUE(is_alternating(t.map));
    EXPECT_TRUE(is_unknotting_tangle(t, t.marked));
    const Fraction f = tangle_fraction(t);
    EXPECT_TRUE(f == (Fraction{5, 3}) || f == (Fraction{3, 5})) << f.str();
  }
}

TEST(Twirl, ResultIsMemberThreeCrossingsLarger) {
  const MarkedDiagram d = parse_marked_pd(k8_13_at5);
  for (int v = 0; v < twirl_variant_count; ++v) {
    const MarkedDiagram t = apply_twirl(d, v);
    EXPECT_EQ(t.crossing_count(), 11);
    EXPECT_TRUE(member_by_oracle(t));
  }
}

TEST(FlypedTongue, ReductionReachesUnknottedClasp) {
  AlmostAltDiagram a = change_crossing(parse_marked_pd(k8_13_at5));
  int steps = 0;
  while (!is_unknotted_clasp(a)) {
    const auto site = find_flyped_tongue(a);
    ASSERT_TRUE(site.has_value());
    const AlmostAltDiagram next = reduce_flyped_tongue(a, *site);
    EXPECT_LT(next.crossing_count(), a.crossing_count());
    EXPECT_TRUE(oracle::jones_trivial(next.diagram.map));
    a = next;
    ++steps;
  }
  EXPECT_GT(steps, 0);
}

TEST(FlypedTongue, NoneOnNonTrivialAlmostAlternating) {
  // Switching any crossing of 5_1 leaves a trefoil.
  const Diagram k5_1 = oracle::table_knot("K5a2");
  ASSERT_EQ(goeritz_determinant(k5_1), 5);
  for (int v = 0; v < 5; ++v) {
    const Reduction r = reduce_almost_alternating(change_crossing(MarkedDiagram{k5_1, v}));
    EXPECT_FALSE(r.unknot);
  }
}
