#include <algorithm>
#include <array>

#include "polargrass/analysis.hpp"
#include "polargrass/error.hpp"
#include "polargrass/polargeom.hpp"

namespace polargrass {

namespace {

void check_frame(const Form& f, const Frame& fr) {
  const Field& F = f.field();
  if (static_cast<int>(fr.pairs.size()) != f.rank()) throw InvalidArgument("frame size differs from the Witt index");
  for (std::size_t i = 0; i < fr.pairs.size(); ++i) {
    const auto& [e, fi] = fr.pairs[i];
    if (static_cast<int>(e.size()) != f.dim() || static_cast<int>(fi.size()) != f.dim())
      throw InvalidArgument("frame vector has the wrong length");
    if (!f.is_singular(e) || !f.is_singular(fi)) throw InvalidArgument("frame vectors must be singular");
    for (std::size_t j = 0; j < fr.pairs.size(); ++j) {
      const auto& [e2, f2] = fr.pairs[j];
      if (f.beta(e, f2) != (i == j ? F.one() : F.zero())) throw InvalidArgument("frame is not hyperbolic");
      if (f.beta(e, e2) != 0 || f.beta(fi, f2) != 0) throw InvalidArgument("frame is not hyperbolic");
    }
  }
}

Geometry thin_geometry(FieldPtr field, std::shared_ptr<const Form> form, GeometryKind kind, int k,
                       std::vector<Subspace> pts, GeometryTags tags) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  std::vector<std::vector<int>> lines;
  for (std::size_t a = 0; a < pts.size(); ++a)
    for (std::size_t b = a + 1; b < pts.size(); ++b)
      if (collinear_by_algebra(kind, form.get(), *field, k, pts[a], pts[b]))
        lines.push_back({static_cast<int>(a), static_cast<int>(b)});
  Geometry g(field, form, kind, tags, std::move(pts), std::move(lines), true);
  return restrict_to(g, [&] {
    PointSet all(g.num_points());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
    return all;
  }());
}

}  // namespace

Geometry build_apartment(std::shared_ptr<const Form> form, GeometryKind kind, int k, const Frame& frame,
                         GeometryTags tags) {
  if (!form) throw InvalidArgument("apartment needs a form");
  check_frame(*form, frame);
  const Field& F = form->field();
  const int n = form->rank();
  if (k < 1 || k > n) throw InvalidArgument("apartment point dimension out of range");
  std::vector<Subspace> pts;
  std::vector<int> pick(k);
  for (int i = 0; i < k; ++i) pick[i] = i;
  while (true) {
    for (int mask = 0; mask < (1 << k); ++mask) {
      std::vector<Vector> rows;
      for (int i = 0; i < k; ++i) rows.push_back((mask >> i) & 1 ? frame.pairs[pick[i]].second : frame.pairs[pick[i]].first);
      pts.push_back(canonicalize(F, form->dim(), rows));
    }
    int i = k - 1;
    while (i >= 0 && pick[i] == n - k + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int r = i + 1; r < k; ++r) pick[r] = pick[r - 1] + 1;
  }
  return thin_geometry(form->field_ptr(), form, kind, k, std::move(pts), tags);
}

Geometry apartment(const Geometry& G, const Frame& frame) {
  if (!G.form()) throw InvalidArgument("use apartment_proj for projective Grassmannians");
  Geometry A = build_apartment(G.form_ptr(), G.base_kind(), G.point_dim(), frame, G.tags());
  for (const auto& p : A.points())
    if (!G.index_of(p)) throw InvalidArgument("frame is incompatible with the geometry");
  return A;
}

Geometry apartment_proj(const Geometry& G, const std::vector<Vector>& basis) {
  const Field& F = G.field();
  const int d = G.ambient_dim();
  const int j = G.point_dim();
  if (static_cast<int>(basis.size()) != d || canonicalize(F, d, basis).dim() != d)
    throw InvalidArgument("apartment needs a basis of the ambient space");
  std::vector<Subspace> pts;
  for (int mask = 0; mask < (1 << d); ++mask) {
    if (__builtin_popcount(static_cast<unsigned>(mask)) != j) continue;
    std::vector<Vector> rows;
    for (int i = 0; i < d; ++i)
      if ((mask >> i) & 1) rows.push_back(basis[i]);
    pts.push_back(canonicalize(F, d, rows));
  }
  return thin_geometry(G.field_ptr(), nullptr, GeometryKind::projective, j, std::move(pts), G.tags());
}

Signature signature_of(const Geometry& G, int x, int y, int distance) {
  const Field& F = G.field();
  const Subspace& X = G.point(x);
  const Subspace& Y = G.point(y);
  Signature s;
  s.distance = distance;
  s.meet_dim = intersect(F, X, Y).dim();
  if (const Form* f = G.form()) {
    s.meet_perp_dim = intersect(F, X, f->perp(Y)).dim();
    s.span_ts = f->is_totally_isotropic(sum(F, X, Y));
  } else {
    s.meet_perp_dim = -1;
  }
  return s;
}

namespace {

struct NamedCodims {
  const char* label;
  int d, c_meet, c_perp;
  bool ts;
};

constexpr std::array<NamedCodims, 9> kDnn2Names{{
    {"0", 0, 0, 0, true},
    {"1", 1, 1, 0, true},
    {"2g", 2, 2, 0, true},
    {"2q", 2, 1, 1, false},
    {"2s", 2, 2, 1, false},
    {"3h", 3, 3, 1, false},
    {"3q", 3, 2, 2, false},
    {"3hh", 3, 3, 2, false},
    {"4", 4, 3, 3, false},
}};

int label_rank(const std::string& s) {
  for (std::size_t i = 0; i < kDnn2Names.size(); ++i)
    if (s == kDnn2Names[i].label) return static_cast<int>(i);
  return 100;
}

}  // namespace

std::optional<std::string> d_nminus2_label(int k, const Signature& s) {
  for (const auto& e : kDnn2Names)
    if (e.d == s.distance && e.c_meet == k - s.meet_dim && e.c_perp == k - s.meet_perp_dim && e.ts == s.span_ts)
      return std::string(e.label);
  return std::nullopt;
}

std::pair<DistanceClassReport, DistributionDiagram> distance_distribution(const Geometry& G, int base, bool refine) {
  if (base < 0 || static_cast<std::size_t>(base) >= G.num_points()) throw InvalidArgument("base is not a point");
  CollinearityGraph g(G);
  auto dist = distances_from(g, base);
  std::map<Signature, PointSet> groups;
  for (int p = 0; p < static_cast<int>(G.num_points()); ++p) {
    Signature s;
    if (refine) {
      s = signature_of(G, base, p, dist[p]);
    } else {
      s.distance = dist[p];
    }
    groups[s].push_back(p);
  }
  DistanceClassReport rep;
  rep.base = base;
  rep.refined = refine;
  const bool named = refine && G.base_kind() == GeometryKind::oriflamme;
  for (auto& [sig, members] : groups) {
    DistanceClass c;
    c.signature = sig;
    c.members = std::move(members);
    std::optional<std::string> lab;
    if (named) lab = d_nminus2_label(G.point_dim(), sig);
    if (lab) {
      c.label = *lab;
    } else if (!refine) {
      c.label = sig.distance == kUnreachable ? "inf" : std::to_string(sig.distance);
    } else {
      c.label = std::to_string(sig.distance) + "[" + std::to_string(sig.meet_dim) + "," +
                std::to_string(sig.meet_perp_dim) + "," + (sig.span_ts ? "T" : "F") + "]";
    }
    rep.classes.push_back(std::move(c));
  }
  std::stable_sort(rep.classes.begin(), rep.classes.end(), [](const DistanceClass& a, const DistanceClass& b) {
    if (a.signature.distance != b.signature.distance) return a.signature.distance < b.signature.distance;
    return label_rank(a.label) < label_rank(b.label);
  });

  DistributionDiagram dia;
  const std::size_t nc = rep.classes.size();
  std::vector<int> cls(G.num_points(), -1);
  for (std::size_t i = 0; i < nc; ++i) {
    dia.labels.push_back(rep.classes[i].label);
    dia.sizes.push_back(rep.classes[i].members.size());
    for (int p : rep.classes[i].members) cls[p] = static_cast<int>(i);
  }
  dia.n.assign(nc, std::vector<int>(nc, 0));
  for (std::size_t i = 0; i < nc; ++i) {
    bool first = true;
    for (int p : rep.classes[i].members) {
      std::vector<int> cnt(nc, 0);
      for (int r : g.neighbors(p)) ++cnt[cls[r]];
      for (std::size_t j = 0; j < nc; ++j) {
        if (first) {
          dia.n[i][j] = cnt[j];
        } else if (dia.n[i][j] != cnt[j]) {
          dia.n[i][j] = -1;
        }
      }
      first = false;
    }
  }
  for (std::size_t i = 0; i < nc; ++i)
    for (std::size_t j = 0; j < nc; ++j) {
      if (dia.n[i][j] < 0) {
        dia.equitable = false;
        continue;
      }
      if (dia.n[j][i] >= 0 && dia.sizes[i] * dia.n[i][j] != dia.sizes[j] * dia.n[j][i]) dia.double_counting = false;
    }
  dia.degree = g.regular_degree();
  return {std::move(rep), std::move(dia)};
}

}  // namespace polargrass
