#include <gtest/gtest.h>

#include <algorithm>

#include "polargrass/analysis.hpp"
#include "polargrass/error.hpp"
#include "polargrass/projgeom.hpp"

using namespace polargrass;

namespace {
Subspace coords(const Field& F, int ambient, std::initializer_list<int> idx) {
  std::vector<Vector> rows;
  for (int i : idx) {
    Vector v(ambient, 0);
    v[i] = 1;
    rows.push_back(v);
  }
  return rows.empty() ? Subspace::zero(ambient) : canonicalize(F, ambient, rows);
}
}  // namespace

TEST(ProjGeom, A32Counts) {
  auto G = build_proj_grassmannian(3, 2, Field::make(2, 1));
  EXPECT_EQ(G.num_points(), 35u);
  EXPECT_EQ(G.num_lines(), 105u);
  for (std::size_t l = 0; l < G.num_lines(); ++l) EXPECT_EQ(G.line(static_cast<int>(l)).size(), 3u);
  EXPECT_EQ(CollinearityGraph(G).regular_degree(), 18);
}

TEST(ProjGeom, A42Count) { EXPECT_EQ(build_proj_grassmannian(4, 2, Field::make(2, 1)).num_points(), 155u); }

TEST(ProjGeom, ProjectiveSpaceIsComplete) {
  auto G = build_proj_grassmannian(3, 1, Field::make(3, 1));
  EXPECT_EQ(G.num_points(), 40u);
  CollinearityGraph g(G);
  EXPECT_EQ(g.regular_degree(), 39);
}

TEST(ProjGeom, Shadows) {
  auto F = Field::make(2, 1);
  auto G = build_proj_grassmannian(3, 2, F);
  auto A = coords(*F, 4, {0});
  auto C = coords(*F, 4, {0, 1, 2});
  auto line = shadow_S(G, C, A);
  EXPECT_EQ(line.size(), 3u);
  EXPECT_TRUE(G.common_line(line[0], line[1]).has_value());
  auto B = coords(*F, 4, {0, 1});
  EXPECT_EQ(shadow_S(G, B, B).size(), 1u);
  auto plus = shadow_S(G, Subspace::full(4), A);
  EXPECT_EQ(plus.size(), 7u);
  EXPECT_TRUE(is_subspace(G, plus));
  EXPECT_EQ(points_inside(G, C).size(), 7u);
  EXPECT_EQ(points_containing(G, A), plus);
}

TEST(ProjGeom, MaximalSingularFamilies) {
  auto G = build_proj_grassmannian(3, 2, Field::make(2, 1));
  auto ms = maximal_singulars_proj(G);
  EXPECT_EQ(ms.size(), 30u);
  for (std::size_t a = 0; a < ms.size(); ++a) {
    EXPECT_EQ(ms[a].points.size(), 7u);
    for (std::size_t b = a + 1; b < ms.size(); ++b) {
      PointSet meet;
      std::set_intersection(ms[a].points.begin(), ms[a].points.end(), ms[b].points.begin(), ms[b].points.end(),
                            std::back_inserter(meet));
      if (meet.size() >= 2) {
        EXPECT_EQ(meet.size(), 3u);
        EXPECT_NE(ms[a].cls, ms[b].cls);
      }
    }
  }
}

TEST(ProjGeom, DistanceMatchesFormula) {
  auto G = build_proj_grassmannian(4, 2, Field::make(2, 1));
  for (int x = 0; x < 155; x += 11)
    for (int y = 0; y < 155; y += 3) EXPECT_EQ(proj_distance(G, x, y), proj_distance_formula(G, x, y));
  EXPECT_EQ(proj_distance(G, 4, 4), 0);
}

TEST(ProjGeom, Errors) {
  auto F = Field::make(2, 1);
  EXPECT_THROW(build_proj_grassmannian(3, 0, F), InvalidArgument);
  EXPECT_THROW(build_proj_grassmannian(3, 4, F), InvalidArgument);
  EXPECT_THROW(build_proj_grassmannian(7, 3, F, 1000), BudgetExceeded);
  EXPECT_THROW(maximal_singulars_proj(build_proj_grassmannian(3, 1, F)), InvalidArgument);
}
