#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace altknot;

namespace {

const char* k8_13 = "X[16,7,1,8] X[8,1,9,2] X[2,14,3,13] X[12,4,13,3] X[4,12,5,11] X[14,6,15,5] X[6,9,7,10] X[10,16,11,15]";
const char* k8_14 = "X[9,1,10,16] X[1,11,2,10] X[13,3,14,2] X[3,7,4,6] X[15,4,16,5] X[5,14,6,15] X[7,13,8,12] X[11,9,12,8]";

std::vector<int> unknotting_crossings(const Diagram& d) {
  std::vector<int> out;
  for (int v = 0; v < d.crossing_count(); ++v)
    if (verify_unknotting_crossing(MarkedDiagram{d, v})) out.push_back(v);
  return out;
}

// A non-clasp member with K_D a trefoil: 6 crossings, determinant 11.
MarkedDiagram trefoil_host() {
  for (const FamilyMember& m : enumerate_family(6)) {
    const GeometricType g = classify(m.diagram);
    if (g.kind == TypeKind::torus && g.torus.r == 2 && std::abs(g.torus.s) == 3) return m.diagram;
  }
  throw Error("no trefoil host");
}

Tangle six_crossing_unknotting_tangle() {
  for (const Tangle& t : unknotting_tangle_corpus(6))
    if (t.crossing_count() == 6) return t;
  throw Error("no 6-crossing tangle");
}

std::vector<char> inserted_mask(const MarkedDiagram& host, const MarkedDiagram& result) {
  // insert_tangle keeps host vertices other than c first, in order.
  std::vector<char> mask(result.diagram.map.vertex_count(), 1);
  for (int v = 0; v + 1 < host.diagram.map.vertex_count(); ++v) mask[v] = 0;
  return mask;
}

}  // namespace

TEST(Verify, AgreesWithBracketOracleOnTable) {
  for (const auto& k : oracle::alternating_table(8))
    for (const Diagram& d : {k.diagram, mirror(k.diagram)})
      for (int v = 0; v < d.crossing_count(); ++v)
        EXPECT_EQ(verify_unknotting_crossing(MarkedDiagram{d, v}), oracle::jones_trivial(switch_vertex(d.map, v)))
            << k.name << " @" << v;
}

TEST(Verify, FiveOneHasNoUnknottingCrossing) {
  EXPECT_TRUE(unknotting_crossings(oracle::table_knot("K5a2")).empty());
}

TEST(Verify, RejectsBadInput) {
  EXPECT_THROW(verify_unknotting_crossing(MarkedDiagram{Diagram{switch_vertex(parse_pd(k8_13).map, 0)}, 1}),
               TopologyError);
}

TEST(Classify, ClaspsAreUnknots) {
  for (int n = 1; n <= 10; ++n)
    for (int sign : {1, -1}) {
      const GeometricType g = classify(clasp_diagram(n, sign));
      EXPECT_EQ(g.kind, TypeKind::unknot);
    }
}

TEST(Classify, EightThirteenTorusPair) {
  const Diagram d = parse_pd(k8_13);
  EXPECT_EQ(goeritz_determinant(d), 29);
  const std::vector<int> u = unknotting_crossings(d);
  ASSERT_EQ(u.size(), 2u);
  EXPECT_NE(canonical_code(MarkedDiagram{d, u[0]}), canonical_code(MarkedDiagram{d, u[1]}));
  std::set<std::pair<int, int>> found;
  for (int c : u) {
    const GeometricType g = classify(MarkedDiagram{d, c});
    ASSERT_EQ(g.kind, TypeKind::torus);
    EXPECT_TRUE(g.alternatives.empty());
    found.insert({g.torus.r, g.torus.s});
    EXPECT_EQ(std::abs(std::abs(2 * g.torus.r * g.torus.s) - 29), 1);
  }
  EXPECT_EQ(found, (std::set<std::pair<int, int>>{{2, 7}, {3, -5}}));
  std::set<std::pair<int, int>> mirrored;
  for (int c : u) {
    const GeometricType g = classify(mirror(MarkedDiagram{d, c}));
    mirrored.insert({g.torus.r, g.torus.s});
  }
  EXPECT_EQ(mirrored, (std::set<std::pair<int, int>>{{2, -7}, {3, 5}}));
}

TEST(Classify, EightFourteenIsTorusThreeFive) {
  const Diagram d = parse_pd(k8_14);
  EXPECT_EQ(goeritz_determinant(d), 31);
  const std::vector<int> u = unknotting_crossings(d);
  ASSERT_FALSE(u.empty());
  bool seen = false;
  for (int c : u) {
    const GeometricType g = classify(MarkedDiagram{d, c});
    seen = seen || (g.kind == TypeKind::torus && g.torus == TorusKnot{3, 5});
  }
  EXPECT_TRUE(seen);
}

TEST(Torus, ParametersFromLensData) {
  EXPECT_EQ(torus_parameters(29, 11), (std::vector<TorusKnot>{{2, 7}}));
  EXPECT_EQ(torus_parameters(-29, 11), (std::vector<TorusKnot>{{3, -5}}));
  EXPECT_EQ(torus_parameters(31, 18), (std::vector<TorusKnot>{{3, 5}}));
  EXPECT_EQ(torus_parameters(7, 4), std::vector<TorusKnot>{});  // unknot surgery only
  EXPECT_EQ(torus_genus({3, 5}), 4);
  EXPECT_EQ(signed_determinant(29), 29);
  EXPECT_EQ(signed_determinant(31), -31);
}

TEST(Torus, ClaspsGiveLensSpacesOfTheUnknot) {
  // m/2 surgery on the unknot is L(m, 2).
  for (int n = 1; n <= 10; ++n)
    for (int sign : {1, -1}) {
      const MarkedDiagram c = clasp_diagram(n, sign);
      const auto tb = is_2bridge(c.diagram);
      ASSERT_TRUE(tb.has_value());
      const long long m = surgery_numerator(c, tb->p);
      const long long p = tb->p, q = mod(m > 0 ? tb->q : -tb->q, p);
      const auto qi = mod_inverse(q, p);
      EXPECT_TRUE(q == 2 || (qi && *qi == 2)) << n << " " << sign;
    }
}

TEST(Spheres, MatchFourCutOracle) {
  std::vector<MarkedDiagram> inputs = enumerate_all_diagrams(8);
  for (const auto& k : oracle::alternating_table(8))
    for (int v = 0; v < k.diagram.crossing_count(); ++v) inputs.push_back({k.diagram, v});
  for (const MarkedDiagram& d : inputs) {
    std::set<std::vector<char>> found;
    for (const ConwaySphere& s : visible_conway_spheres(d)) found.insert(s.interior);
    EXPECT_EQ(found, oracle::four_cut_interiors(d.diagram.map, d.marked)) << to_pd(d);
  }
}

TEST(Spheres, TrefoilHasNoSubstantialSphere) {
  const MarkedDiagram t = clasp_diagram(1, 1);
  EXPECT_FALSE(visible_conway_spheres(t).empty());
  for (const ConwaySphere& s : visible_conway_spheres(t)) {
    EXPECT_TRUE(s.interior_count() == 1 || s.exterior_count() == 1);
    EXPECT_FALSE(is_substantial(t, s));
  }
}

TEST(Spheres, ClaspExteriorsAreRational) {
  const MarkedDiagram c = clasp_diagram(2, 1);
  for (const ConwaySphere& s : visible_conway_spheres(c)) EXPECT_TRUE(is_rational(exterior_tangle(c, s)));
}

TEST(Satellite, TrefoilCompanion) {
  const MarkedDiagram host = trefoil_host();
  const Tangle t = six_crossing_unknotting_tangle();
  const MarkedDiagram d = insert_tangle(host, t);
  EXPECT_TRUE(is_reduced(d.diagram.map));
  EXPECT_TRUE(oracle::jones_trivial(switch_vertex(d.diagram.map, d.marked)));

  const auto sphere = sphere_around(d, inserted_mask(host, d));
  ASSERT_TRUE(sphere.has_value());
  EXPECT_EQ(sphere->interior_count(), t.crossing_count());
  EXPECT_TRUE(is_substantial(d, *sphere));
  const auto [same, grown] = maximize_interior(d, *sphere);
  EXPECT_EQ(grown.interior, sphere->interior);
  EXPECT_EQ(canonical_code(extract_companion(d, *sphere)), canonical_code(host));

  const GeometricType g = classify(d);
  ASSERT_EQ(g.kind, TypeKind::satellite);
  EXPECT_EQ(canonical_code(*g.companion), canonical_code(host));
  const GeometricType gc = classify(*g.companion);
  EXPECT_EQ(gc.kind, TypeKind::torus);
  EXPECT_EQ(gc.torus.r, 2);
  EXPECT_EQ(std::abs(gc.torus.s), 3);
}

TEST(Satellite, TwirlGivesCableOfInput) {
  const MarkedDiagram d = parse_marked_pd(std::string(k8_13) + " @5");
  for (int v = 0; v < twirl_variant_count; ++v) {
    const MarkedDiagram t = apply_twirl(d, v);
    const GeometricType g = classify(t);
    ASSERT_EQ(g.kind, TypeKind::satellite);
    EXPECT_EQ(canonical_code(*g.companion), canonical_code(d));
    EXPECT_TRUE(verify_unknotting_crossing(*g.companion));
    EXPECT_LT(g.companion->crossing_count(), t.crossing_count());
  }
}

TEST(Satellite, ExtractRejectsNonUnknottingInterior) {
  const MarkedDiagram d = apply_twirl(parse_marked_pd(std::string(k8_13) + " @5"), 0);
  for (const ConwaySphere& s : substantial_spheres(d)) {
    const Tangle t = interior_tangle(d, s);
    if (!is_unknotting_tangle(t, t.marked)) EXPECT_THROW(extract_companion(d, s), TopologyError);
  }
}

TEST(Classify, HyperbolicExample) {
  const MarkedDiagram d{oracle::table_knot("K8a14"), 4};
  ASSERT_TRUE(verify_unknotting_crossing(d));
  EXPECT_FALSE(is_2bridge(d.diagram).has_value());
  EXPECT_TRUE(substantial_spheres(d).empty());
  EXPECT_EQ(classify(d).kind, TypeKind::hyperbolic);
}

TEST(Classify, InvariantUnderRelabeling) {
  for (const FamilyMember& m : enumerate_family(8)) {
    const GeometricType a = classify(m.diagram), b = classify(canonical_form(m.diagram));
    EXPECT_EQ(a.kind, b.kind);
    EXPECT_EQ(describe(a), describe(b));
  }
}

TEST(Classify, RefusesNonUnknottingCrossing) {
  EXPECT_THROW(classify(MarkedDiagram{parse_pd(k8_13), 0}), Error);
}
