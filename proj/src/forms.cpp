#include "polargrass/forms.hpp"

#include "polargrass/error.hpp"

namespace polargrass {

std::string to_string(FormKind k) {
  switch (k) {
    case FormKind::symplectic: return "symplectic";
    case FormKind::hermitian: return "hermitian";
    case FormKind::parabolic: return "parabolic";
    case FormKind::hyperbolic: return "hyperbolic";
    case FormKind::elliptic: return "elliptic";
  }
  return "?";
}

FormKind form_kind_from_string(const std::string& s) {
  if (s == "symplectic") return FormKind::symplectic;
  if (s == "hermitian") return FormKind::hermitian;
  if (s == "parabolic") return FormKind::parabolic;
  if (s == "hyperbolic") return FormKind::hyperbolic;
  if (s == "elliptic") return FormKind::elliptic;
  throw InvalidArgument("unknown form kind '" + s + "'");
}

Elem elliptic_constant(const Field& F) {
  for (int c = 0; c < F.order(); ++c) {
    bool root = false;
    for (int x = 0; x < F.order() && !root; ++x) {
      Elem e = static_cast<Elem>(x);
      root = F.add(F.add(F.mul(e, e), e), static_cast<Elem>(c)) == 0;
    }
    if (!root) return static_cast<Elem>(c);
  }
  throw Unsupported("no irreducible t^2+t+c over " + F.name());
}

Form Form::standard(FormKind kind, int n, FieldPtr field, int ambient_dim) {
  if (!field) throw InvalidArgument("null field");
  if (n < 1) throw InvalidArgument("Witt index must be at least 1");
  const Field& F = *field;
  Form f;
  f.kind_ = kind;
  f.n_ = n;
  f.field_ = field;
  f.standard_ = true;
  switch (kind) {
    case FormKind::symplectic:
      if (F.characteristic() == 2) throw InvalidArgument("symplectic polar spaces require odd characteristic");
      f.dim_ = 2 * n;
      break;
    case FormKind::hermitian:
      if (F.degree() != 2) throw InvalidArgument("hermitian forms require a quadratic extension field");
      f.dim_ = ambient_dim == 0 ? 2 * n : ambient_dim;
      if (f.dim_ != 2 * n && f.dim_ != 2 * n + 1)
        throw InvalidArgument("hermitian ambient dimension must be 2n or 2n+1");
      break;
    case FormKind::hyperbolic: f.dim_ = 2 * n; break;
    case FormKind::parabolic: f.dim_ = 2 * n + 1; break;
    case FormKind::elliptic: f.dim_ = 2 * n + 2; break;
  }
  if (kind != FormKind::hermitian && ambient_dim != 0 && ambient_dim != f.dim_)
    throw InvalidArgument("ambient dimension does not match form kind");
  const int d = f.dim_;
  f.gram_.assign(static_cast<std::size_t>(d) * d, 0);
  auto G = [&](int i, int j) -> Elem& { return f.gram_[static_cast<std::size_t>(i) * d + j]; };
  for (int i = 0; i < n; ++i) {
    G(2 * i, 2 * i + 1) = 1;
    G(2 * i + 1, 2 * i) = kind == FormKind::symplectic ? F.neg(1) : 1;
  }
  if (f.is_orthogonal()) f.quad_.assign(d, 0);
  if (kind == FormKind::parabolic) {
    f.quad_[2 * n] = 1;
    G(2 * n, 2 * n) = F.add(1, 1);
  } else if (kind == FormKind::elliptic) {
    Elem c = elliptic_constant(F);
    f.quad_[2 * n] = 1;
    f.quad_[2 * n + 1] = c;
    G(2 * n, 2 * n) = F.add(1, 1);
    G(2 * n + 1, 2 * n + 1) = F.add(c, c);
    G(2 * n, 2 * n + 1) = 1;
    G(2 * n + 1, 2 * n) = 1;
  } else if (kind == FormKind::hermitian && d == 2 * n + 1) {
    G(2 * n, 2 * n) = 1;
  }
  f.build_terms();
  return f;
}

Form Form::custom(FormKind kind, int n, FieldPtr field, int dim, std::vector<Elem> gram, std::vector<Elem> quad) {
  if (!field) throw InvalidArgument("null field");
  const Field& F = *field;
  if (dim < 1 || gram.size() != static_cast<std::size_t>(dim) * dim)
    throw InvalidArgument("gram matrix must be dim x dim");
  for (Elem e : gram)
    if (e >= F.order()) throw InvalidArgument("gram entry is not a field element");
  Form f;
  f.kind_ = kind;
  f.n_ = n;
  f.dim_ = dim;
  f.field_ = field;
  f.gram_ = std::move(gram);
  auto G = [&](int i, int j) { return f.gram_[static_cast<std::size_t>(i) * dim + j]; };
  if (f.is_orthogonal()) {
    if (quad.size() != static_cast<std::size_t>(dim)) throw InvalidArgument("quadratic coefficients required");
    for (int i = 0; i < dim; ++i) {
      if (quad[i] >= F.order()) throw InvalidArgument("quad entry is not a field element");
      if (G(i, i) != F.add(quad[i], quad[i])) throw InvalidArgument("gram diagonal is not the polarization of Q");
      for (int j = 0; j < dim; ++j)
        if (G(i, j) != G(j, i)) throw InvalidArgument("orthogonal gram matrix must be symmetric");
    }
    f.quad_ = std::move(quad);
  } else {
    if (!quad.empty()) throw InvalidArgument("quad coefficients only apply to orthogonal kinds");
    if (kind == FormKind::symplectic) {
      if (F.characteristic() == 2) throw InvalidArgument("symplectic polar spaces require odd characteristic");
      for (int i = 0; i < dim; ++i) {
        if (G(i, i) != 0) throw InvalidArgument("symplectic gram must have zero diagonal");
        for (int j = 0; j < dim; ++j)
          if (G(i, j) != F.neg(G(j, i))) throw InvalidArgument("symplectic gram must be antisymmetric");
      }
    } else {
      if (F.degree() != 2) throw InvalidArgument("hermitian forms require a quadratic extension field");
      for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
          if (G(j, i) != F.conj(G(i, j))) throw InvalidArgument("gram matrix is not hermitian");
    }
  }
  f.build_terms();
  if (!f.is_nondegenerate()) throw InvalidArgument("form is degenerate");
  if (f.witt_index() != n) throw InvalidArgument("computed Witt index differs from the declared rank");
  return f;
}

void Form::build_terms() {
  beta_terms_.clear();
  q_terms_.clear();
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j)
      if (Elem c = gram(i, j); c != 0) beta_terms_.push_back({i, j, c});
  if (is_orthogonal()) {
    for (int i = 0; i < dim_; ++i) {
      if (quad_[i] != 0) q_terms_.push_back({i, i, quad_[i]});
      for (int j = i + 1; j < dim_; ++j)
        if (Elem c = gram(i, j); c != 0) q_terms_.push_back({i, j, c});
    }
  }
}

void Form::check_vec(std::span<const Elem> v) const {
  if (static_cast<int>(v.size()) != dim_) throw InvalidArgument("vector dimension does not match form");
}

Elem Form::beta(std::span<const Elem> u, std::span<const Elem> v) const {
  const Field& F = *field_;
  Elem s = 0;
  if (sigma_active()) {
    for (const auto& t : beta_terms_)
      if (u[t.i] && v[t.j]) s = F.add(s, F.mul(F.mul(u[t.i], t.c), F.conj(v[t.j])));
  } else {
    for (const auto& t : beta_terms_)
      if (u[t.i] && v[t.j]) s = F.add(s, F.mul(F.mul(u[t.i], t.c), v[t.j]));
  }
  return s;
}

Elem Form::q(std::span<const Elem> v) const {
  if (!is_orthogonal()) throw InvalidArgument("quadratic form only exists for orthogonal kinds");
  const Field& F = *field_;
  Elem s = 0;
  for (const auto& t : q_terms_)
    if (v[t.i] && v[t.j]) s = F.add(s, F.mul(t.c, F.mul(v[t.i], v[t.j])));
  return s;
}

FieldElement Form::eval_beta(std::span<const Elem> u, std::span<const Elem> v) const {
  check_vec(u);
  check_vec(v);
  return FieldElement(field_.get(), beta(u, v));
}

FieldElement Form::eval_q(std::span<const Elem> v) const {
  check_vec(v);
  return FieldElement(field_.get(), q(v));
}

bool Form::is_singular(std::span<const Elem> v) const {
  return is_orthogonal() ? q(v) == 0 : beta(v, v) == 0;
}

Subspace Form::perp(const Subspace& X) const {
  if (X.ambient_dim() != dim_) throw InvalidArgument("subspace ambient does not match form");
  if (X.is_zero()) return Subspace::full(dim_);
  const Field& F = *field_;
  // beta(w, x) = sum_i w_i (sum_j G_ij sigma(x_j)), linear in w.
  std::vector<Vector> rows;
  rows.reserve(X.dim());
  for (int r = 0; r < X.dim(); ++r) {
    auto x = X.row(r);
    Vector a(dim_, 0);
    for (const auto& t : beta_terms_)
      if (x[t.j]) a[t.i] = F.add(a[t.i], F.mul(t.c, F.conj(x[t.j])));
    rows.push_back(std::move(a));
  }
  return kernel(F, dim_, rows);
}

bool Form::is_totally_isotropic(const Subspace& U) const {
  if (U.ambient_dim() != dim_) throw InvalidArgument("subspace ambient does not match form");
  for (int i = 0; i < U.dim(); ++i) {
    if (is_orthogonal() && q(U.row(i)) != 0) return false;
    for (int j = i; j < U.dim(); ++j)
      if (beta(U.row(i), U.row(j)) != 0) return false;
  }
  return true;
}

Subspace Form::radical_of(const Subspace& U) const { return intersect(*field_, U, perp(U)); }

Subspace Form::singular_radical_of(const Subspace& U) const {
  Subspace R = radical_of(U);
  if (!is_orthogonal() || R.is_zero()) return R;
  std::vector<Vector> sing;
  for (auto& v : all_vectors(*field_, R))
    if (q(v) == 0) sing.push_back(std::move(v));
  return canonicalize(*field_, dim_, sing);
}

bool Form::quotient_nondegenerate(const Subspace& U, const Subspace& C) const {
  const Field& F = *field_;
  if (!contains(F, U, C)) return false;
  return singular_radical_of(U) == C && contains(F, radical_of(U), C);
}

bool Form::is_nondegenerate() const { return singular_radical_of(Subspace::full(dim_)).is_zero(); }

int Form::max_ts_dim(const Subspace& U, const Subspace& start) const {
  const Field& F = *field_;
  Subspace S = start;
  while (true) {
    Subspace P = intersect(F, perp(S), U);
    bool grown = false;
    for (const auto& v : projective_points(F, P)) {
      if (!is_singular(v) || contains_vector(F, S, v)) continue;
      S = add_vector(F, S, v);
      grown = true;
      break;
    }
    if (!grown) return S.dim();
  }
}

int Form::witt_index() const { return max_ts_dim(Subspace::full(dim_), Subspace::zero(dim_)); }

Frame Form::standard_frame() const {
  if (!standard_) throw Unsupported("no built-in frame for a user-supplied form");
  Frame fr;
  auto unit = [&](int i) {
    Vector v(dim_, 0);
    v[i] = 1;
    return v;
  };
  for (int i = 0; i < n_; ++i) fr.pairs.emplace_back(unit(2 * i), unit(2 * i + 1));
  for (int i = 2 * n_; i < dim_; ++i) fr.anisotropic.push_back(unit(i));
  return fr;
}

}  // namespace polargrass
