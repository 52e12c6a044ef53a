#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "polargrass/field.hpp"

namespace polargrass {

using Vector = std::vector<Elem>;

inline constexpr std::size_t kDefaultEnumerationBudget = 10'000'000;

// A linear subspace in reduced row-echelon form. The representation is
// canonical, so equality of subspaces is equality of the stored bytes.
class Subspace {
 public:
  Subspace() = default;

  static Subspace zero(int ambient);
  static Subspace full(int ambient);

  int ambient_dim() const { return ambient_; }
  int dim() const { return dim_; }
  bool is_zero() const { return dim_ == 0; }

  std::span<const Elem> row(int i) const {
    return {rows_.data() + static_cast<std::size_t>(i) * ambient_, static_cast<std::size_t>(ambient_)};
  }
  const std::vector<Elem>& data() const { return rows_; }
  std::vector<Vector> basis() const;
  std::vector<int> pivots() const;

  friend bool operator==(const Subspace&, const Subspace&) = default;
  friend std::strong_ordering operator<=>(const Subspace& a, const Subspace& b) {
    if (auto c = a.ambient_ <=> b.ambient_; c != 0) return c;
    if (auto c = a.dim_ <=> b.dim_; c != 0) return c;
    return a.rows_ <=> b.rows_;
  }

  std::size_t hash() const;

 private:
  friend Subspace canonicalize_flat(const Field&, int, std::vector<Elem>);
  Subspace(int ambient, int dim, std::vector<Elem> rows) : ambient_(ambient), dim_(dim), rows_(std::move(rows)) {}

  int ambient_ = 0;
  int dim_ = 0;
  std::vector<Elem> rows_;
};

struct SubspaceHash {
  std::size_t operator()(const Subspace& s) const { return s.hash(); }
};

// Row space of `flat` (row-major, ambient columns) in canonical form.
Subspace canonicalize_flat(const Field& F, int ambient, std::vector<Elem> flat);
Subspace canonicalize(const Field& F, const std::vector<Vector>& rows);
Subspace canonicalize(const Field& F, int ambient, const std::vector<Vector>& rows);

Subspace sum(const Field& F, const Subspace& U, const Subspace& V);
Subspace intersect(const Field& F, const Subspace& U, const Subspace& V);
Subspace add_vector(const Field& F, const Subspace& U, std::span<const Elem> v);

// {w : <row, w> = 0 for every row of U} under the plain dot product.
Subspace annihilator(const Field& F, const Subspace& U);

// Solution space of sum_j M[i][j] x_j = 0, M given as rows of length ambient.
Subspace kernel(const Field& F, int ambient, const std::vector<Vector>& rows);

// v reduced modulo U (pivot columns of U cleared).
Vector reduce(const Field& F, const Subspace& U, std::span<const Elem> v);
bool contains_vector(const Field& F, const Subspace& U, std::span<const Elem> v);
bool contains(const Field& F, const Subspace& big, const Subspace& small);

// Scales v so its first nonzero entry is 1. Zero vectors are left untouched.
void normalize(const Field& F, Vector& v);

// All j-subspaces of F^ambient, sorted canonically.
std::vector<Subspace> enumerate_subspaces(int ambient, int j, const Field& F,
                                          std::size_t budget = kDefaultEnumerationBudget);

// All subspaces B with A <= B <= C and dim B = d, sorted canonically.
std::vector<Subspace> subspaces_between(const Field& F, const Subspace& A, const Subspace& C, int d,
                                        std::size_t budget = kDefaultEnumerationBudget);

// Vectors completing a basis of A to a basis of C (C must contain A).
std::vector<Vector> complement_basis(const Field& F, const Subspace& A, const Subspace& C);

// Every vector of U, in lexicographic order of coefficient tuples.
std::vector<Vector> all_vectors(const Field& F, const Subspace& U);

// Normalized representatives of the 1-spaces of U.
std::vector<Vector> projective_points(const Field& F, const Subspace& U);

// Gaussian binomial [n choose k]_q; saturates at SIZE_MAX.
std::size_t gaussian_binomial(int n, int k, int q);

}  // namespace polargrass
