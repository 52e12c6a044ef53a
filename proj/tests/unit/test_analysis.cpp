#include <gtest/gtest.h>

#include <map>

#include "polargrass/analysis.hpp"
#include "polargrass/error.hpp"
#include "polargrass/lemmas.hpp"
#include "polargrass/polargeom.hpp"
#include "polargrass/projgeom.hpp"

using namespace polargrass;

namespace {
Vector frame_vec(int dim, char kind, int i) {
  Vector v(dim, 0);
  v[kind == 'e' ? 2 * (i - 1) : 2 * i - 1] = 1;
  return v;
}
Subspace frame_span(const Geometry& G, std::initializer_list<std::pair<char, int>> vs) {
  std::vector<Vector> rows;
  for (auto [c, i] : vs) rows.push_back(frame_vec(G.ambient_dim(), c, i));
  return canonicalize(G.field(), G.ambient_dim(), rows);
}
int index(const Geometry& G, const Subspace& S) {
  auto i = G.index_of(S);
  EXPECT_TRUE(i.has_value());
  return i.value_or(-1);
}
}  // namespace

TEST(Analysis, SingleLineIsComplete) {
  auto G = build_proj_grassmannian(1, 1, Field::make(3, 1));
  CollinearityGraph g(G);
  EXPECT_EQ(g.size(), 4u);
  EXPECT_EQ(g.regular_degree(), 3);
}

TEST(Analysis, DistancesAndDiameter) {
  auto G = build_proj_grassmannian(4, 2, Field::make(2, 1));
  CollinearityGraph g(G);
  DistanceTable D(g);
  EXPECT_TRUE(D.is_full());
  EXPECT_EQ(graph_diameter(D), 2);
  auto row = distances_from(g, 7);
  EXPECT_EQ(row[7], 0);
  for (int y = 0; y < 155; ++y) EXPECT_EQ(row[y], D(7, y));
  DistanceTable lazy(g, 10);
  EXPECT_FALSE(lazy.is_full());
  for (int y = 0; y < 155; ++y) EXPECT_EQ(lazy(7, y), D(7, y));
}

TEST(Analysis, ClosuresOfTwoPoints) {
  auto G = build_geometry("B", 3, 1, 2);
  CollinearityGraph g(G);
  DistanceTable D(g);
  int x = 0, y = g.neighbors(0)[0];
  auto line = G.line(*G.common_line(x, y));
  PointSet L(line.begin(), line.end());
  EXPECT_EQ(subspace_closure(G, {x}), PointSet{x});
  EXPECT_EQ(subspace_closure(G, sorted_set({x, y})), L);
  EXPECT_EQ(convex_closure(G, g, D, sorted_set({x, y})), L);
  EXPECT_TRUE(is_convex(G, g, D, L));
  EXPECT_TRUE(is_subspace(G, L));
}

TEST(Analysis, FrameGeneratesKleinQuadric) {
  auto G = build_geometry("D", 3, 1, 2);
  ASSERT_EQ(G.num_points(), 35u);
  PointSet frame;
  for (int i = 1; i <= 3; ++i) {
    frame.push_back(index(G, frame_span(G, {{'e', i}})));
    frame.push_back(index(G, frame_span(G, {{'f', i}})));
  }
  EXPECT_EQ(subspace_closure(G, sorted_set(frame)).size(), 35u);
}

TEST(Analysis, IntervalAndConfinedClosure) {
  auto G = build_proj_grassmannian(3, 2, Field::make(2, 1));
  CollinearityGraph g(G);
  DistanceTable D(g);
  int x = 0, y = -1;
  for (int p = 0; p < 35; ++p)
    if (D(x, p) == 2) y = p;
  ASSERT_GE(y, 0);
  // Two opposite lines of PG(3,2) have 3*3 transversals.
  EXPECT_EQ(interval(g, D, x, y).size(), 11u);
  PointSet all(35);
  for (int i = 0; i < 35; ++i) all[i] = i;
  ConfinedClosure cc(G, D, all);
  EXPECT_TRUE(cc.generates_universe(x, y));
  EXPECT_EQ(cc.closure({x, y}), convex_closure(G, g, D, {x, y}));
}

TEST(Analysis, PolarApartment) {
  auto G = build_geometry("C", 3, 1, 3);
  auto A = apartment(G, G.form()->standard_frame());
  ASSERT_EQ(A.num_points(), 6u);
  EXPECT_TRUE(A.is_thin());
  CollinearityGraph g(A);
  EXPECT_EQ(g.regular_degree(), 4);
}

TEST(Analysis, ProjectiveApartment) {
  auto G = build_proj_grassmannian(3, 2, Field::make(2, 1));
  std::vector<Vector> basis;
  for (int i = 0; i < 4; ++i) {
    Vector v(4, 0);
    v[i] = 1;
    basis.push_back(v);
  }
  auto A = apartment_proj(G, basis);
  EXPECT_EQ(A.num_points(), 6u);
  EXPECT_EQ(CollinearityGraph(A).regular_degree(), 4);
}

TEST(Analysis, OriflammeApartmentDiagram) {
  auto A = oriflamme_apartment(5, 2);
  ASSERT_EQ(A.num_points(), 80u);
  int base = index(A, frame_span(A, {{'e', 1}, {'e', 2}, {'e', 3}}));
  auto [rep, dia] = distance_distribution(A, base, true);
  EXPECT_TRUE(rep.refined);
  EXPECT_EQ(dia.labels, (std::vector<std::string>{"0", "1", "2g", "2q", "2s", "3h", "3q", "3hh", "4"}));
  EXPECT_EQ(dia.sizes, (std::vector<std::size_t>{1, 12, 12, 3, 24, 12, 3, 12, 1}));
  EXPECT_TRUE(dia.equitable);
  EXPECT_TRUE(dia.double_counting);
  EXPECT_EQ(dia.n[0][1], 12);
  EXPECT_EQ(dia.n[1][0], 1);
  for (std::size_t i = 0; i < 9; ++i)
    for (std::size_t j = 0; j < 9; ++j)
      EXPECT_EQ(dia.sizes[i] * static_cast<std::size_t>(dia.n[i][j]), dia.sizes[j] * static_cast<std::size_t>(dia.n[j][i]));
}

TEST(Analysis, RepresentativesLandInNamedClasses) {
  auto A = oriflamme_apartment(5, 2);
  int base = index(A, frame_span(A, {{'e', 1}, {'e', 2}, {'e', 3}}));
  auto [rep, dia] = distance_distribution(A, base, true);
  std::map<int, std::string> label_of;
  for (const auto& c : rep.classes)
    for (int p : c.members) label_of[p] = c.label;
  const std::vector<std::pair<std::string, Subspace>> reps = {
      {"2g", frame_span(A, {{'e', 1}, {'e', 4}, {'e', 5}})},  {"2q", frame_span(A, {{'e', 1}, {'e', 2}, {'f', 3}})},
      {"2s", frame_span(A, {{'e', 1}, {'f', 3}, {'e', 4}})},  {"3h", frame_span(A, {{'f', 3}, {'e', 4}, {'e', 5}})},
      {"3q", frame_span(A, {{'e', 1}, {'f', 2}, {'f', 3}})},  {"3hh", frame_span(A, {{'f', 2}, {'f', 3}, {'e', 4}})},
      {"4", frame_span(A, {{'f', 1}, {'f', 2}, {'f', 3}})}};
  for (const auto& [label, S] : reps) EXPECT_EQ(label_of[index(A, S)], label);
}

TEST(Analysis, UnrefinedDistribution) {
  auto G = build_geometry("B", 2, 1, 3);
  auto [rep, dia] = distance_distribution(G, 0, false);
  EXPECT_EQ(dia.sizes, (std::vector<std::size_t>{1, 12, 27}));
  EXPECT_TRUE(dia.equitable);
}
