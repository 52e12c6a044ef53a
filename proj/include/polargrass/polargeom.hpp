#pragma once

#include <memory>
#include <string>
#include <vector>

#include "polargrass/forms.hpp"
#include "polargrass/geometry.hpp"

namespace polargrass {

// Totally isotropic (totally singular for orthogonal kinds) k-spaces, sorted.
std::vector<Subspace> enumerate_ti(const Form& f, int k, std::size_t budget = kDefaultEnumerationBudget);

// levels[i] = all t.i. i-spaces for 0 <= i <= kmax.
std::vector<std::vector<Subspace>> enumerate_ti_levels(const Form& f, int kmax,
                                                       std::size_t budget = kDefaultEnumerationBudget);

// M_{n,k}: points I_k(W). Lines are T(C,A) with C a t.i. (k+1)-space for
// k < n, and T(A^perp, A) for k = n.
Geometry build_polar_grassmannian(std::shared_ptr<const Form> form, int k, std::size_t budget = kDefaultPointBudget);

// D_{n,n-2}: t.s. (n-2)-spaces of a hyperbolic form, lines L(L0, L-, L+).
Geometry build_D_grassmannian_nminus2(std::shared_ptr<const Form> form, std::size_t budget = kDefaultPointBudget);

// Form for a type tag (B, C, D, 2A-even, 2A-odd, 2D, D-nminus2) of Witt index n over GF(q).
std::shared_ptr<const Form> form_for_type(const std::string& type, int n, int q);

// Any geometry by type tag. For "A" the parameters are (m, j); otherwise (n, k).
Geometry build_geometry(const std::string& type, int n, int k, int q, std::size_t budget = kDefaultPointBudget);

// n or n-1: parity of codim(X cap <e_1..e_n>) in X.
int oriflamme_class(const Form& f, const Subspace& X);

struct LineFlag {
  Subspace L0;
  Subspace Lminus;  // class n-1
  Subspace Lplus;   // class n
};

// Flag (L0, L-, L+) of a line of D_{n,n-2}, computed from its points.
LineFlag line_flag(const Geometry& G, int line);

// Points B of G with lower <= B <= upper (upper need not be t.i.).
PointSet shadow_T(const Geometry& G, const Subspace& upper, const Subspace& lower);

struct ParabolicShadow {
  PointSet points;
  int m = 0;  // predicted type A_{f-e-1, k-e}
  int j = 0;
  bool in_hypothesis = false;  // e < k-1 and f > k+1
};

ParabolicShadow parabolic_subspace(const Geometry& G, const Subspace& E, const Subspace& F);

// Collinearity of two points decided from the subspaces alone, for the
// geometry kind `kind` with point dimension k.
bool collinear_by_algebra(GeometryKind kind, const Form* form, const Field& F, int k, const Subspace& x,
                          const Subspace& y);

}  // namespace polargrass
