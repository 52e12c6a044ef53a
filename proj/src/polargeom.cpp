#include "polargrass/polargeom.hpp"

#include <algorithm>
#include <unordered_set>

#include "pencils.hpp"
#include "polargrass/error.hpp"
#include "polargrass/projgeom.hpp"

namespace polargrass {

std::vector<std::vector<Subspace>> enumerate_ti_levels(const Form& f, int kmax, std::size_t budget) {
  if (kmax < 0) throw InvalidArgument("negative subspace dimension");
  const Field& F = f.field();
  const int d = f.dim();
  std::vector<std::vector<Subspace>> levels;
  levels.push_back({Subspace::zero(d)});
  for (int i = 1; i <= kmax; ++i) {
    std::unordered_set<Subspace, SubspaceHash> next;
    for (const auto& S : levels.back()) {
      Subspace P = f.perp(S);
      Subspace R = canonicalize(F, d, complement_basis(F, S, P));
      for (const auto& v : projective_points(F, R)) {
        if (!f.is_singular(v)) continue;
        next.insert(add_vector(F, S, v));
        if (next.size() > budget)
          throw BudgetExceeded("more than " + std::to_string(budget) + " totally isotropic " + std::to_string(i) +
                               "-spaces");
      }
    }
    if (next.empty())
      throw InvalidArgument("no totally isotropic " + std::to_string(i) + "-space exists (Witt index is " +
                            std::to_string(i - 1) + ")");
    std::vector<Subspace> lvl(next.begin(), next.end());
    std::sort(lvl.begin(), lvl.end());
    levels.push_back(std::move(lvl));
  }
  return levels;
}

std::vector<Subspace> enumerate_ti(const Form& f, int k, std::size_t budget) {
  if (k < 1) throw InvalidArgument("k must be at least 1");
  if (k > f.rank()) throw InvalidArgument("k exceeds the Witt index " + std::to_string(f.rank()));
  return std::move(enumerate_ti_levels(f, k, budget).back());
}

namespace {

std::string type_tag(const Form& f) {
  switch (f.kind()) {
    case FormKind::parabolic: return "B";
    case FormKind::symplectic: return "C";
    case FormKind::hyperbolic: return "D";
    case FormKind::elliptic: return "2D";
    case FormKind::hermitian: return f.dim() % 2 == 0 ? "2A-even" : "2A-odd";
  }
  return "?";
}

void check_point_budget(std::size_t count, std::size_t budget) {
  if (count > budget)
    throw BudgetExceeded("geometry has " + std::to_string(count) + " points, budget " + std::to_string(budget));
}

}  // namespace

Geometry build_polar_grassmannian(std::shared_ptr<const Form> form, int k, std::size_t budget) {
  if (!form) throw InvalidArgument("null form");
  const Form& f = *form;
  const Field& F = f.field();
  const int n = f.rank();
  if (n < 2) throw InvalidArgument("polar Grassmannians need Witt index at least 2");
  if (k < 1 || k > n) throw InvalidArgument("polar Grassmannian needs 1 <= k <= n");
  if (f.kind() == FormKind::hyperbolic && k != 1 && k > n - 3)
    throw InvalidArgument("hyperbolic type builds k = 1 or k <= n-3 here; use the D_{n,n-2} builder for k = n-2");
  const int top = k < n ? k + 1 : k;
  auto levels = enumerate_ti_levels(f, top, std::max(budget, kDefaultEnumerationBudget));
  std::vector<Subspace> pts = std::move(levels[k]);
  check_point_budget(pts.size(), budget);
  auto idx = detail::make_index(pts);
  std::vector<std::vector<int>> lines;
  if (k < n) {
    auto lp = detail::make_local_pencils(F, k + 1);
    for (const auto& C : levels[k + 1]) detail::append_pencils(F, C, lp, idx, lines);
  } else {
    for (const auto& A : levels[n - 1]) {
      Subspace R = canonicalize(F, f.dim(), complement_basis(F, A, f.perp(A)));
      std::vector<int> l;
      for (const auto& v : projective_points(F, R))
        if (f.is_singular(v)) l.push_back(idx.at(add_vector(F, A, v)));
      lines.push_back(std::move(l));
    }
  }
  GeometryTags tags{type_tag(f), n, k, 0, 0, F.order()};
  return Geometry(form->field_ptr(), form, GeometryKind::polar, tags, std::move(pts), std::move(lines));
}

Geometry build_D_grassmannian_nminus2(std::shared_ptr<const Form> form, std::size_t budget) {
  if (!form) throw InvalidArgument("null form");
  const Form& f = *form;
  if (f.kind() != FormKind::hyperbolic) throw InvalidArgument("D_{n,n-2} needs a hyperbolic form");
  const int n = f.rank();
  if (n < 4) throw InvalidArgument("D_{n,n-2} needs n >= 4");
  const Field& F = f.field();
  auto levels = enumerate_ti_levels(f, n - 1, std::max(budget, kDefaultEnumerationBudget));
  std::vector<Subspace> pts = std::move(levels[n - 2]);
  check_point_budget(pts.size(), budget);
  auto idx = detail::make_index(pts);
  // Every line L(L0, L-, L+) is the pencil of (n-2)-spaces between L0 and
  // M = L+ cap L-, a t.s. (n-1)-space; conversely each such pencil is a line.
  std::vector<std::vector<int>> lines;
  auto lp = detail::make_local_pencils(F, n - 1);
  for (const auto& M : levels[n - 1]) detail::append_pencils(F, M, lp, idx, lines);
  GeometryTags tags{"D-nminus2", n, n - 2, 0, 0, F.order()};
  return Geometry(form->field_ptr(), form, GeometryKind::oriflamme, tags, std::move(pts), std::move(lines));
}

std::shared_ptr<const Form> form_for_type(const std::string& type, int n, int q) {
  FieldPtr F = Field::from_order(q);
  if (type == "B") return std::make_shared<Form>(Form::standard(FormKind::parabolic, n, F));
  if (type == "C") return std::make_shared<Form>(Form::standard(FormKind::symplectic, n, F));
  if (type == "D" || type == "D-nminus2") return std::make_shared<Form>(Form::standard(FormKind::hyperbolic, n, F));
  if (type == "2D") return std::make_shared<Form>(Form::standard(FormKind::elliptic, n, F));
  if (type == "2A-even") return std::make_shared<Form>(Form::standard(FormKind::hermitian, n, F, 2 * n));
  if (type == "2A-odd") return std::make_shared<Form>(Form::standard(FormKind::hermitian, n, F, 2 * n + 1));
  throw InvalidArgument("unknown geometry type '" + type + "'");
}

Geometry build_geometry(const std::string& type, int n, int k, int q, std::size_t budget) {
  if (type == "A") return build_proj_grassmannian(n, k, Field::from_order(q), budget);
  auto form = form_for_type(type, n, q);
  if (type == "D-nminus2") {
    if (k != 0 && k != n - 2) throw InvalidArgument("D-nminus2 has k = n-2");
    return build_D_grassmannian_nminus2(form, budget);
  }
  if (type == "D" && k == n - 2 && k >= 2) return build_D_grassmannian_nminus2(form, budget);
  return build_polar_grassmannian(form, k, budget);
}

int oriflamme_class(const Form& f, const Subspace& X) {
  if (f.kind() != FormKind::hyperbolic) throw InvalidArgument("oriflamme classes need a hyperbolic form");
  const int n = f.rank();
  if (X.dim() != n || !f.is_totally_isotropic(X)) throw InvalidArgument("not a maximal totally singular subspace");
  std::vector<Vector> ref;
  for (int i = 0; i < n; ++i) {
    Vector e(f.dim(), 0);
    e[2 * i] = 1;
    ref.push_back(std::move(e));
  }
  Subspace R = canonicalize(f.field(), f.dim(), ref);
  int codim = n - intersect(f.field(), X, R).dim();
  return codim % 2 == 0 ? n : n - 1;
}

LineFlag line_flag(const Geometry& G, int line) {
  if (G.base_kind() != GeometryKind::oriflamme || !G.form()) throw InvalidArgument("line flags exist for D_{n,n-2}");
  const Form& f = *G.form();
  const Field& F = G.field();
  auto pts = G.line(line);
  Subspace L0 = G.point(pts[0]);
  Subspace M = G.point(pts[0]);
  for (int p : pts) {
    L0 = intersect(F, L0, G.point(p));
    M = sum(F, M, G.point(p));
  }
  Subspace R = canonicalize(F, f.dim(), complement_basis(F, M, f.perp(M)));
  std::vector<Subspace> tops;
  for (const auto& v : projective_points(F, R))
    if (f.is_singular(v)) tops.push_back(add_vector(F, M, v));
  if (tops.size() != 2) throw Error("internal: a t.s. (n-1)-space must lie in exactly two maximal ones");
  LineFlag fl{L0, tops[0], tops[1]};
  if (oriflamme_class(f, fl.Lplus) != f.rank()) std::swap(fl.Lplus, fl.Lminus);
  return fl;
}

PointSet shadow_T(const Geometry& G, const Subspace& upper, const Subspace& lower) {
  const Field& F = G.field();
  if (!contains(F, upper, lower)) throw InvalidArgument("shadow_T needs lower contained in upper");
  PointSet out;
  const int k = G.point_dim();
  if (upper.dim() < k || lower.dim() > k) return out;
  // Enumerating between lower and upper is cheaper than a scan when the gap is small.
  if (gaussian_binomial(upper.dim() - lower.dim(), k - lower.dim(), F.order()) * 4 < G.num_points()) {
    for (const auto& B : subspaces_between(F, lower, upper, k))
      if (auto i = G.index_of(B)) out.push_back(*i);
    std::sort(out.begin(), out.end());
    return out;
  }
  for (int i = 0; i < static_cast<int>(G.num_points()); ++i) {
    const Subspace& P = G.point(i);
    if (contains(F, P, lower) && contains(F, upper, P)) out.push_back(i);
  }
  return out;
}

ParabolicShadow parabolic_subspace(const Geometry& G, const Subspace& E, const Subspace& Fs) {
  const Form* f = G.form();
  if (!f) throw InvalidArgument("parabolic subspaces are defined for polar geometries");
  if (!contains(G.field(), Fs, E)) throw InvalidArgument("E is not contained in F");
  if (!f->is_totally_isotropic(Fs)) throw InvalidArgument("F is not totally isotropic");
  const int k = G.point_dim(), e = E.dim(), fd = Fs.dim();
  ParabolicShadow out;
  out.points = shadow_T(G, Fs, E);
  out.m = fd - e - 1;
  out.j = k - e;
  out.in_hypothesis = e < k - 1 && fd > k + 1;
  return out;
}

bool collinear_by_algebra(GeometryKind kind, const Form* form, const Field& F, int k, const Subspace& x,
                          const Subspace& y) {
  if (x == y) return false;
  const int meet = intersect(F, x, y).dim();
  if (meet != k - 1) return false;
  if (kind == GeometryKind::projective) return true;
  if (!form) throw InvalidArgument("polar collinearity needs a form");
  if (k == form->rank() && kind == GeometryKind::polar) return true;
  return form->is_totally_isotropic(sum(F, x, y));
}

}  // namespace polargrass
