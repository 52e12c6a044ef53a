#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "polargrass/field.hpp"
#include "polargrass/linalg.hpp"

namespace polargrass {

enum class FormKind { symplectic, hermitian, parabolic, hyperbolic, elliptic };

std::string to_string(FormKind k);
FormKind form_kind_from_string(const std::string& s);

// Hyperbolic pairs (e_i, f_i) plus the anisotropic complement, as coordinate vectors.
struct Frame {
  std::vector<std::pair<Vector, Vector>> pairs;
  std::vector<Vector> anisotropic;
};

class Form {
 public:
  // Standard form of Witt index n. Coordinates are ordered e1, f1, ..., en, fn
  // followed by the anisotropic part. `ambient_dim` only matters for hermitian
  // forms (2n or 2n+1, default 2n).
  static Form standard(FormKind kind, int n, FieldPtr field, int ambient_dim = 0);

  // User-supplied Gram data; validated against the kind's invariants.
  static Form custom(FormKind kind, int n, FieldPtr field, int dim, std::vector<Elem> gram,
                     std::vector<Elem> quad);

  FormKind kind() const { return kind_; }
  int rank() const { return n_; }
  int dim() const { return dim_; }
  const Field& field() const { return *field_; }
  const FieldPtr& field_ptr() const { return field_; }
  bool is_orthogonal() const {
    return kind_ == FormKind::parabolic || kind_ == FormKind::hyperbolic || kind_ == FormKind::elliptic;
  }
  bool sigma_active() const { return kind_ == FormKind::hermitian; }
  bool is_standard() const { return standard_; }

  Elem gram(int i, int j) const { return gram_[static_cast<std::size_t>(i) * dim_ + j]; }
  const std::vector<Elem>& gram_data() const { return gram_; }
  // Diagonal coefficients of Q; empty for non-orthogonal kinds.
  const std::vector<Elem>& quad() const { return quad_; }

  // beta and q assume vectors of length dim(); eval_beta and eval_q validate.
  Elem beta(std::span<const Elem> u, std::span<const Elem> v) const;
  Elem q(std::span<const Elem> v) const;
  FieldElement eval_beta(std::span<const Elem> u, std::span<const Elem> v) const;
  FieldElement eval_q(std::span<const Elem> v) const;

  // Q(v) = 0 for orthogonal kinds, beta(v, v) = 0 otherwise.
  bool is_singular(std::span<const Elem> v) const;

  Subspace perp(const Subspace& X) const;
  bool is_totally_isotropic(const Subspace& U) const;

  // U cap U^perp, and its subspace of singular vectors (equal for
  // non-orthogonal kinds; differs in characteristic 2).
  Subspace radical_of(const Subspace& U) const;
  Subspace singular_radical_of(const Subspace& U) const;
  // The form restricted to U/C has trivial singular radical, where C must be
  // the radical of U. Used for quotients such as (x+y)/(x cap y).
  bool quotient_nondegenerate(const Subspace& U, const Subspace& C) const;
  bool is_nondegenerate() const;

  // Dimension of a maximal totally singular subspace containing `start`
  // inside U, by greedy extension. Exact when the restriction to U modulo
  // its radical is non-degenerate.
  int max_ts_dim(const Subspace& U, const Subspace& start) const;
  int witt_index() const;

  Frame standard_frame() const;

 private:
  Form() = default;
  void build_terms();
  void check_vec(std::span<const Elem> v) const;

  FormKind kind_ = FormKind::symplectic;
  int n_ = 0;
  int dim_ = 0;
  FieldPtr field_;
  std::vector<Elem> gram_;
  std::vector<Elem> quad_;
  bool standard_ = false;

  struct Term {
    int i, j;
    Elem c;
  };
  std::vector<Term> beta_terms_;
  std::vector<Term> q_terms_;  // i <= j; i == j means c*v_i^2
};

// Smallest c (by code) with t^2 + t + c irreducible over F.
Elem elliptic_constant(const Field& F);

}  // namespace polargrass
