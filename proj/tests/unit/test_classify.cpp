#include <gtest/gtest.h>

#include <algorithm>

#include "polargrass/classify.hpp"
#include "polargrass/error.hpp"
#include "polargrass/lemmas.hpp"
#include "polargrass/polargeom.hpp"

using namespace polargrass;

namespace {
struct B32 : ::testing::Test {
  static void SetUpTestSuite() {
    G = new Geometry(build_geometry("B", 3, 2, 2));
    g = new CollinearityGraph(*G);
    D = new DistanceTable(*g);
  }
  static void TearDownTestSuite() {
    delete D;
    delete g;
    delete G;
  }
  // First y at distance 2 from x whose pair has the given kind.
  static int find(int x, PairKind kind) {
    for (int y = 0; y < static_cast<int>(G->num_points()); ++y)
      if ((*D)(x, y) == 2 && classify_pair(*G, *g, *D, x, y).kind == kind) return y;
    return -1;
  }
  static Geometry* G;
  static CollinearityGraph* g;
  static DistanceTable* D;
};
Geometry* B32::G = nullptr;
CollinearityGraph* B32::g = nullptr;
DistanceTable* B32::D = nullptr;

std::size_t common_neighbours(const CollinearityGraph& g, int x, int y) {
  std::size_t c = 0;
  for (int z : g.neighbors(x)) c += g.adjacent(z, y);
  return c;
}
}  // namespace

TEST_F(B32, NoMinusPairsBelowWittIndexFour) {
  EXPECT_EQ(find(0, PairKind::minus), -1);
  EXPECT_EQ(find(7, PairKind::minus), -1);
}

TEST(Classify, MinusPairSpansA32) {
  auto G = build_geometry("D", 4, 2, 2);
  CollinearityGraph g(G);
  DistanceTable D(g);
  int y = -1;
  for (int p = 0; p < static_cast<int>(G.num_points()) && y < 0; ++p)
    if (D(0, p) == 2 && classify_pair(G, g, D, 0, p).kind == PairKind::minus) y = p;
  ASSERT_GE(y, 0);
  auto pc = classify_pair(G, g, D, 0, y);
  EXPECT_TRUE(pc.lower.is_zero());
  EXPECT_EQ(pc.upper.dim(), 4);
  auto closure = convex_closure(G, g, D, sorted_set({0, y}));
  EXPECT_EQ(closure.size(), 35u);
  EXPECT_EQ(closure, symp_of_pair(G, pc));
  auto iso = grassmannian_isomorphism_type(G, closure);
  EXPECT_EQ(iso.status, IsoStatus::yes);
  EXPECT_EQ(std::pair(iso.m, iso.j), std::pair(3, 2));
  auto rep = classify_subspace(G, closure);
  EXPECT_EQ(rep.verdict, Verdict::parabolic);
}

TEST_F(B32, PlusPairSpansGeneralizedQuadrangle) {
  int y = find(0, PairKind::plus);
  ASSERT_GE(y, 0);
  auto pc = classify_pair(*G, *g, *D, 0, y);
  EXPECT_EQ(pc.lower.dim(), 1);
  auto symp = symp_of_pair(*G, pc);
  EXPECT_EQ(symp.size(), 15u);
  EXPECT_EQ(convex_closure(*G, *g, *D, sorted_set({0, y})), symp);
  EXPECT_EQ(grassmannian_isomorphism_type(*G, symp).status, IsoStatus::no);
  EXPECT_EQ(trichotomy_matches(*G, 0, y), 1);
}

TEST_F(B32, SpecialPairHasOneCommonNeighbour) {
  int y = find(0, PairKind::zero_special);
  ASSERT_GE(y, 0);
  auto pc = classify_pair(*G, *g, *D, 0, y);
  EXPECT_EQ(common_neighbours(*g, 0, y), 1u);
  EXPECT_TRUE(g->adjacent(pc.middle, 0));
  EXPECT_TRUE(g->adjacent(pc.middle, y));
  EXPECT_EQ(convex_closure(*G, *g, *D, sorted_set({0, y})).size(), 5u);
  EXPECT_THROW(symp_of_pair(*G, pc), InvalidArgument);
  EXPECT_EQ(trichotomy_matches(*G, 0, y), 1);
}

TEST_F(B32, RejectsOtherDistances) {
  EXPECT_THROW(classify_pair(*G, *g, *D, 0, 0), InvalidArgument);
  EXPECT_THROW(classify_pair(*G, *g, *D, 0, g->neighbors(0)[0]), InvalidArgument);
}

TEST_F(B32, ParabolicRoundTrip) {
  auto line = G->line(0);
  PointSet L(line.begin(), line.end());
  Subspace top = G->point(L[0]);
  for (int p : L) top = sum(G->field(), top, G->point(p));
  ASSERT_EQ(top.dim(), 3);
  auto S = parabolic_subspace(*G, Subspace::zero(G->ambient_dim()), top).points;
  EXPECT_EQ(S.size(), 7u);
  auto w = recognize_parabolic(*G, S);
  ASSERT_TRUE(w.has_value());
  EXPECT_TRUE(w->E.is_zero());
  EXPECT_EQ(w->F, top);
  EXPECT_FALSE(w->residue);
  auto lw = recognize_parabolic(*G, L);
  ASSERT_TRUE(lw.has_value());
  EXPECT_EQ(lw->E.dim(), 1);
  EXPECT_EQ(lw->F, top);
  EXPECT_EQ(classify_subspace(*G, S).verdict, Verdict::not_grassmannian);
}

TEST(Classify, SingleLineIsProjectiveLine) {
  auto G = build_geometry("B", 3, 1, 2);
  auto line = G.line(0);
  auto iso = grassmannian_isomorphism_type(G, PointSet(line.begin(), line.end()));
  EXPECT_EQ(iso.status, IsoStatus::yes);
  EXPECT_EQ(std::pair(iso.m, iso.j), std::pair(1, 1));
}

TEST(Classify, ExceptionalInParabolicQuadric) {
  auto G = build_geometry("B", 3, 1, 2);
  auto found = find_exceptional_A32(G);
  ASSERT_FALSE(found.reports.empty());
  const auto& r = found.reports.front();
  EXPECT_EQ(r.subject.size(), 35u);
  EXPECT_EQ(r.verdict, Verdict::exceptional_d31);
  EXPECT_EQ(r.iso.status, IsoStatus::yes);
  EXPECT_FALSE(r.flag.has_value());
  ASSERT_TRUE(r.U && r.C);
  EXPECT_EQ(r.U->dim(), 6);
  EXPECT_TRUE(r.C->is_zero());
  EXPECT_FALSE(G.form()->is_totally_isotropic(*r.U));
  EXPECT_EQ(classify_subspace(G, r.subject).verdict, Verdict::exceptional_d31);
}

TEST(Classify, NoExceptionalInSymplectic) {
  auto G = build_geometry("C", 3, 2, 3);
  EXPECT_TRUE(find_exceptional_A32(G).reports.empty());
}

TEST(Classify, IsoWitnessIsAnEmbedding) {
  auto G = build_geometry("D", 3, 1, 2);
  PointSet all(G.num_points());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
  auto iso = test_isomorphic_to(G, all, 3, 2);
  ASSERT_EQ(iso.status, IsoStatus::yes);
  auto witness = iso.witness;
  std::sort(witness.begin(), witness.end());
  EXPECT_EQ(witness, all);
  EXPECT_EQ(test_isomorphic_to(G, all, 4, 1).status, IsoStatus::no);
}

// Regression for the computed structure: the 2s description does not hold.
TEST(Classify, MiddleSetsInD42) {
  auto r = check_no_a53(4, 2);
  EXPECT_FALSE(r.passed);
  auto row = [&](const std::string& label) {
    for (const auto& x : r.rows)
      if (x.rfind(label + "\t", 0) == 0) return x;
    return std::string();
  };
  EXPECT_NE(row("2g").find("holds"), std::string::npos) << row("2g");
  EXPECT_NE(row("2q").find("holds"), std::string::npos) << row("2q");
  EXPECT_NE(row("2s").find("FAILS"), std::string::npos) << row("2s");
  EXPECT_NE(row("2s").find("punctured_lines_through_z=3"), std::string::npos) << row("2s");
}

TEST(Classify, DualPolarHasNoA32) {
  auto G = build_geometry("C", 2, 2, 3);
  auto e = enumerate_A32_subspaces(G);
  EXPECT_TRUE(e.reports.empty());
}
