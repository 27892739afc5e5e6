#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace altknot;

namespace {

std::map<int, int> count_by_size(const std::vector<FamilyMember>& ms) {
  std::map<int, int> out;
  for (const FamilyMember& m : ms) ++out[m.diagram.crossing_count()];
  return out;
}

}  // namespace

TEST(Enumerate, MatchesBracketOracleThroughEight) {
  std::set<std::string> found;
  for (const MarkedDiagram& d : enumerate_all_diagrams(8)) found.insert(key_string(canonical_key(d)));
  EXPECT_EQ(found, oracle::jones_family(8));
}

TEST(Enumerate, FlypeClassesPartitionTheOracleFamily) {
  EnumerateOptions o;
  o.max_crossings = 8;
  o.mirrors = true;
  std::set<std::string> found;
  std::size_t total = 0;
  for (const FamilyMember& m : enumerate_family(o))
    for (const std::string& code : m.representatives) {
      found.insert(key_string(canonical_key(parse_marked_pd(code))));
      ++total;
    }
  EXPECT_EQ(total, found.size());
  EXPECT_EQ(found, oracle::jones_family(8));
}

TEST(Enumerate, FlypeClassCountsThroughEight) {
  EXPECT_EQ(count_by_size(enumerate_family(8)), (std::map<int, int>{{3, 1}, {4, 1}, {5, 1}, {6, 3}, {7, 3}, {8, 8}}));
}

TEST(Enumerate, LineagesReplay) {
  for (const FamilyMember& m : enumerate_family(9)) {
    const MarkedDiagram d = replay(m.lineage);
    EXPECT_EQ(canonical_code(d), canonical_code(m.diagram));
    EXPECT_TRUE(std::binary_search(m.representatives.begin(), m.representatives.end(), canonical_code(d)));
    EXPECT_EQ(m.code, m.representatives.front());
    EXPECT_EQ(m.lineage.steps.size(), m.lineage.moves.size());
    int size = m.lineage.seed.n + 2;
    for (const MoveRecord& r : m.lineage.moves) size += r.delta;
    EXPECT_EQ(size, m.diagram.crossing_count());
  }
}

TEST(Enumerate, Deterministic) {
  const auto a = enumerate_family(8), b = enumerate_family(8);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].code, b[i].code);
    EXPECT_EQ(a[i].lineage.moves.size(), b[i].lineage.moves.size());
  }
}

TEST(Enumerate, SmallBoundIsClasps) {
  const auto ms = enumerate_family(4);
  std::set<std::string> codes, clasps;
  for (const FamilyMember& m : ms) codes.insert(m.code);
  for (int n = 1; n <= 2; ++n)
    for (int sign : {1, -1}) {
      const MarkedDiagram c = clasp_diagram(n, sign);
      const MarkedDiagram mc = mirror(c);
      clasps.insert(std::min(canonical_code(c), canonical_code(mc)));
    }
  EXPECT_EQ(codes.size(), clasps.size());
}

TEST(Enumerate, BoundsAreNested) {
  std::set<std::string> six;
  for (const FamilyMember& m : enumerate_family(6)) six.insert(m.code);
  for (const FamilyMember& m : enumerate_family(4)) EXPECT_TRUE(six.count(m.code));
}

TEST(Enumerate, CapAndMinimum) {
  EXPECT_THROW(enumerate_family(15), CapExceeded);
  EXPECT_THROW(enumerate_family(2), Error);
  EnumerateOptions o;
  o.max_crossings = 15;
  o.cap = 15;
  EXPECT_NO_THROW(check_enumerate_options(o));
}

TEST(Census, DeterminantsAreOdd) {
  const auto stream = classify_family(enumerate_family(8));
  const auto census = determinant_census(stream, 1000);
  for (const auto& [det, count] : census) EXPECT_EQ(det % 2, 1);
  EXPECT_EQ(census.at(3), 1);
  EXPECT_EQ(census.at(5), 1);
}

TEST(Census, GenusBoundOnTorusMembers) {
  const auto stream = classify_family(enumerate_family(10));
  const auto rows = genus_bound_report(stream);
  EXPECT_FALSE(rows.empty());
  for (const GenusRow& r : rows) {
    EXPECT_TRUE(r.ok) << r.code;
    EXPECT_EQ(r.bound, 4 * torus_genus(r.torus) + 3);
    EXPECT_EQ(std::llabs(std::llabs(2LL * r.torus.r * r.torus.s) - r.det), 1);
  }
}

TEST(Corpus, FiveCrossingsGiveOnlyTwirlTangles) {
  const auto corpus = unknotting_tangle_corpus(5);
  ASSERT_EQ(corpus.size(), 9u);
  EXPECT_EQ(corpus.front().crossing_count(), 1);
  std::set<std::vector<int>> twirls;
  for (int v = 0; v < twirl_variant_count; ++v) twirls.insert(tangle_key(twirl_tangle(v)));
  std::set<std::vector<int>> keys;
  for (std::size_t i = 1; i < corpus.size(); ++i) {
    keys.insert(tangle_key(corpus[i]));
    EXPECT_EQ(corpus[i].crossing_count(), 4);
    EXPECT_TRUE(is_rational(corpus[i]));
    EXPECT_TRUE(is_unknotting_tangle(corpus[i], corpus[i].marked));
  }
  for (const auto& k : twirls) EXPECT_TRUE(keys.count(k));
}

TEST(Corpus, SixAndSevenCrossingCounts) {
  std::map<int, int> sizes;
  for (const Tangle& t : unknotting_tangle_corpus(7)) ++sizes[t.crossing_count()];
  EXPECT_EQ(sizes, (std::map<int, int>{{1, 1}, {4, 8}, {6, 40}, {7, 80}}));
}
