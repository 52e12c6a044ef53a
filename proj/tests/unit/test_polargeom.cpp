#include <gtest/gtest.h>

#include "polargrass/analysis.hpp"
#include "polargrass/classify.hpp"
#include "polargrass/error.hpp"
#include "polargrass/polargeom.hpp"

using namespace polargrass;

namespace {
// Standard coordinates: e_i at 2(i-1), f_i at 2i-1.
Vector e(int dim, int i) {
  Vector v(dim, 0);
  v[2 * (i - 1)] = 1;
  return v;
}
Vector f(int dim, int i) {
  Vector v(dim, 0);
  v[2 * i - 1] = 1;
  return v;
}
}  // namespace

TEST(PolarGeom, B31) {
  auto G = build_geometry("B", 3, 1, 2);
  EXPECT_EQ(G.num_points(), 63u);
  EXPECT_EQ(G.num_lines(), 315u);
  EXPECT_EQ(G.tags().type, "B");
  EXPECT_EQ(CollinearityGraph(G).regular_degree(), 30);
}

TEST(PolarGeom, B32) {
  auto G = build_geometry("B", 3, 2, 2);
  EXPECT_EQ(G.num_points(), 315u);
  for (std::size_t l = 0; l < G.num_lines(); ++l) EXPECT_EQ(G.line(static_cast<int>(l)).size(), 3u);
  CollinearityGraph g(G);
  const Form* form = G.form();
  for (int x = 0; x < 315; x += 13)
    for (int y = 0; y < 315; ++y)
      EXPECT_EQ(g.adjacent(x, y),
                collinear_by_algebra(GeometryKind::polar, form, G.field(), 2, G.point(x), G.point(y)));
}

TEST(PolarGeom, MaximalSpacesOfHyperbolicQuadric) {
  auto form = Form::standard(FormKind::hyperbolic, 3, Field::make(2, 1));
  auto tops = enumerate_ti(form, 3);
  ASSERT_EQ(tops.size(), 30u);
  int same = 0;
  for (const auto& X : tops) same += oriflamme_class(form, X) == 3;
  EXPECT_EQ(same, 15);
}

TEST(PolarGeom, OriflammeClasses) {
  auto form = Form::standard(FormKind::hyperbolic, 4, Field::make(2, 1));
  const auto& F = form.field();
  EXPECT_EQ(oriflamme_class(form, canonicalize(F, {e(8, 1), e(8, 2), e(8, 3), e(8, 4)})), 4);
  EXPECT_EQ(oriflamme_class(form, canonicalize(F, {e(8, 1), e(8, 2), e(8, 3), f(8, 4)})), 3);
  EXPECT_EQ(oriflamme_class(form, canonicalize(F, {e(8, 1), e(8, 2), f(8, 3), f(8, 4)})), 4);
  EXPECT_THROW(oriflamme_class(form, canonicalize(F, {e(8, 1), e(8, 2)})), InvalidArgument);
}

TEST(PolarGeom, DualPolarC33) {
  auto G = build_geometry("C", 3, 3, 3);
  EXPECT_EQ(G.num_points(), 1120u);
  const Form& form = *G.form();
  for (std::size_t l = 0; l < G.num_lines(); l += 17) {
    auto pts = G.line(static_cast<int>(l));
    ASSERT_EQ(pts.size(), 4u);
    Subspace A = intersect(G.field(), G.point(pts[0]), G.point(pts[1]));
    EXPECT_EQ(A.dim(), 2);
    EXPECT_EQ(shadow_T(G, form.perp(A), A), PointSet(pts.begin(), pts.end()));
  }
}

TEST(PolarGeom, OriflammeD42) {
  auto G = build_geometry("D", 4, 2, 2);
  EXPECT_EQ(G.kind(), GeometryKind::oriflamme);
  EXPECT_EQ(G.num_points(), 1575u);
  for (int l = 0; l < 40; ++l) {
    auto fl = line_flag(G, l);
    EXPECT_EQ(fl.L0.dim(), 1);
    EXPECT_EQ(oriflamme_class(*G.form(), fl.Lplus), 4);
    EXPECT_EQ(oriflamme_class(*G.form(), fl.Lminus), 3);
    for (int p : G.line(l)) {
      EXPECT_TRUE(contains(G.field(), G.point(p), fl.L0));
      EXPECT_TRUE(contains(G.field(), intersect(G.field(), fl.Lplus, fl.Lminus), G.point(p)));
    }
  }
}

TEST(PolarGeom, ParabolicShadows) {
  auto G = build_geometry("D", 4, 2, 2);
  const auto& F = G.field();
  auto top = canonicalize(F, {e(8, 1), e(8, 2), e(8, 3), e(8, 4)});
  auto whole = parabolic_subspace(G, Subspace::zero(8), top);
  EXPECT_EQ(whole.points.size(), 35u);
  EXPECT_EQ(whole.m, 3);
  EXPECT_EQ(whole.j, 2);
  EXPECT_TRUE(whole.in_hypothesis);
  EXPECT_EQ(test_isomorphic_to(G, whole.points, 3, 2).status, IsoStatus::yes);

  auto line = parabolic_subspace(G, canonicalize(F, {e(8, 1)}), canonicalize(F, {e(8, 1), e(8, 2), e(8, 3)}));
  EXPECT_EQ(line.points.size(), 3u);
  EXPECT_TRUE(G.common_line(line.points[0], line.points[1]).has_value());

  auto B = canonicalize(F, {e(8, 1), e(8, 2)});
  EXPECT_EQ(parabolic_subspace(G, B, top).points.size(), 1u);
  EXPECT_THROW(parabolic_subspace(G, top, B), InvalidArgument);
  EXPECT_THROW(parabolic_subspace(G, Subspace::zero(8), canonicalize(F, {e(8, 1), f(8, 1)})), InvalidArgument);
}

TEST(PolarGeom, Errors) {
  EXPECT_THROW(build_geometry("Q", 3, 1, 2), InvalidArgument);
  EXPECT_THROW(build_geometry("B", 3, 4, 2), InvalidArgument);
  EXPECT_THROW(build_geometry("C", 3, 1, 2), InvalidArgument);
  EXPECT_THROW(build_geometry("D-nminus2", 3, 1, 2), InvalidArgument);
  EXPECT_THROW(build_geometry("B", 4, 2, 3, 1000), BudgetExceeded);
  EXPECT_THROW(build_geometry("A", 3, 2, 6), InvalidArgument);
}
