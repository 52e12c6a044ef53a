#pragma once

#include <vector>

#include "polargrass/geometry.hpp"

namespace polargrass {

// A_{m,j}(F): j-subspaces of F^{m+1}, lines S(C,A) with dim A = j-1, dim C = j+1.
Geometry build_proj_grassmannian(int m, int j, FieldPtr field, std::size_t budget = kDefaultPointBudget);

// Points B of G with A <= B <= C.
PointSet shadow_S(const Geometry& G, const Subspace& C, const Subspace& A);

// Points inside U (the set P(U)) and points containing X (the set P_X).
PointSet points_inside(const Geometry& G, const Subspace& U);
PointSet points_containing(const Geometry& G, const Subspace& X);

struct MaximalSingular {
  PointSet points;
  char cls;          // '+' for S(V,D), '-' for S(E,0)
  Subspace witness;  // D (dim j-1) or E (dim j+1)
};

// Both families of maximal singular subspaces of A_{m,j}, 2 <= j <= m-1.
std::vector<MaximalSingular> maximal_singulars_proj(const Geometry& G);

// Graph distance by BFS, and the algebraic value dim x - dim(x cap y).
int proj_distance(const Geometry& G, int x, int y);
int proj_distance_formula(const Geometry& G, int x, int y);

}  // namespace polargrass
