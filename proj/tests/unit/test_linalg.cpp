#include <gtest/gtest.h>

#include "polargrass/error.hpp"
#include "polargrass/linalg.hpp"

using namespace polargrass;

namespace {
Vector unit(int dim, int i) {
  Vector v(dim, 0);
  v[i] = 1;
  return v;
}
}  // namespace

TEST(Linalg, CanonicalizeSwappedRows) {
  auto F = Field::make(2, 1);
  auto S = canonicalize(*F, {{0, 1}, {1, 0}});
  EXPECT_EQ(S.dim(), 2);
  EXPECT_EQ(S.basis(), (std::vector<Vector>{{1, 0}, {0, 1}}));
  EXPECT_EQ(S, Subspace::full(2));
}

TEST(Linalg, CanonicalizeDuplicateRow) {
  auto F = Field::make(2, 1);
  auto S = canonicalize(*F, {{1, 1}, {1, 1}});
  EXPECT_EQ(S.dim(), 1);
  EXPECT_EQ(S.basis(), (std::vector<Vector>{{1, 1}}));
}

TEST(Linalg, CanonicalizeClearsAbovePivot) {
  auto F = Field::make(3, 1);
  auto S = canonicalize(*F, {{1, 2, 0}, {0, 1, 1}});
  EXPECT_EQ(S.pivots(), (std::vector<int>{0, 1}));
  // (1,2,0) - 2*(0,1,1) = (1,0,-2) = (1,0,1)
  EXPECT_EQ(S.basis(), (std::vector<Vector>{{1, 0, 1}, {0, 1, 1}}));
}

TEST(Linalg, CanonicalFormIsBasisIndependent) {
  auto F = Field::make(3, 1);
  auto a = canonicalize(*F, {{1, 2, 0}, {0, 1, 1}});
  auto b = canonicalize(*F, {{1, 0, 1}, {1, 1, 2}});
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.hash(), b.hash());
}

TEST(Linalg, SumAndIntersect) {
  auto F = Field::make(2, 1);
  auto e1 = canonicalize(*F, {unit(3, 0)});
  auto e2 = canonicalize(*F, {unit(3, 1)});
  auto e12 = canonicalize(*F, {unit(3, 0), unit(3, 1)});
  auto e23 = canonicalize(*F, {unit(3, 1), unit(3, 2)});
  EXPECT_EQ(sum(*F, e12, Subspace::zero(3)), e12);
  EXPECT_EQ(sum(*F, e1, e2), e12);
  EXPECT_EQ(intersect(*F, e12, e12), e12);
  EXPECT_EQ(intersect(*F, e12, e23), e2);
  EXPECT_TRUE(contains(*F, e12, e1));
  EXPECT_FALSE(contains(*F, e23, e1));
}

TEST(Linalg, DimensionFormula) {
  auto F = Field::make(3, 1);
  auto planes = enumerate_subspaces(4, 2, *F);
  for (std::size_t a = 0; a < planes.size(); a += 7)
    for (std::size_t b = 0; b < planes.size(); b += 5) {
      auto s = sum(*F, planes[a], planes[b]);
      auto i = intersect(*F, planes[a], planes[b]);
      EXPECT_EQ(s.dim() + i.dim(), 4);
    }
}

TEST(Linalg, EnumerationCounts) {
  auto F2 = Field::make(2, 1);
  auto F3 = Field::make(3, 1);
  EXPECT_EQ(enumerate_subspaces(4, 2, *F2).size(), 35u);
  EXPECT_EQ(enumerate_subspaces(3, 1, *F3).size(), 13u);
  auto z = enumerate_subspaces(5, 0, *F3);
  ASSERT_EQ(z.size(), 1u);
  EXPECT_TRUE(z[0].is_zero());
  EXPECT_EQ(gaussian_binomial(5, 2, 2), 155u);
  EXPECT_EQ(gaussian_binomial(4, 2, 3), 130u);
}

TEST(Linalg, EnumerationIsSortedAndDistinct) {
  auto F = Field::make(2, 2);
  auto lines = enumerate_subspaces(3, 1, *F);
  EXPECT_EQ(lines.size(), 21u);
  for (std::size_t i = 1; i < lines.size(); ++i) EXPECT_LT(lines[i - 1], lines[i]);
}

TEST(Linalg, AnnihilatorAndKernel) {
  auto F = Field::make(3, 1);
  auto U = canonicalize(*F, {{1, 1, 0, 0}});
  auto A = annihilator(*F, U);
  EXPECT_EQ(A.dim(), 3);
  EXPECT_TRUE(contains_vector(*F, A, Vector{1, 2, 0, 0}));
  EXPECT_EQ(kernel(*F, 4, {{1, 1, 0, 0}}), A);
}

TEST(Linalg, SubspacesBetween) {
  auto F = Field::make(2, 1);
  auto A = canonicalize(*F, {unit(4, 0)});
  auto mids = subspaces_between(*F, A, Subspace::full(4), 2);
  EXPECT_EQ(mids.size(), 7u);
  EXPECT_THROW(subspaces_between(*F, Subspace::full(4), A, 2), InvalidArgument);
}

TEST(Linalg, VectorsAndPoints) {
  auto F = Field::make(3, 1);
  auto U = canonicalize(*F, {unit(3, 0), unit(3, 1)});
  EXPECT_EQ(all_vectors(*F, U).size(), 9u);
  EXPECT_EQ(projective_points(*F, U).size(), 4u);
  Vector v{0, 2, 1};
  normalize(*F, v);
  EXPECT_EQ(v, (Vector{0, 1, 2}));
  auto comp = complement_basis(*F, canonicalize(*F, {unit(3, 0)}), Subspace::full(3));
  EXPECT_EQ(comp.size(), 2u);
}

TEST(Linalg, Errors) {
  auto F = Field::make(2, 1);
  EXPECT_THROW(canonicalize(*F, {{1, 0}, {1}}), InvalidArgument);
  EXPECT_THROW(canonicalize(*F, {{2, 0}}), InvalidArgument);
  EXPECT_THROW(sum(*F, Subspace::zero(2), Subspace::zero(3)), InvalidArgument);
  EXPECT_THROW(enumerate_subspaces(3, 4, *F), InvalidArgument);
  EXPECT_THROW(enumerate_subspaces(10, 5, *F, 1000), BudgetExceeded);
}
