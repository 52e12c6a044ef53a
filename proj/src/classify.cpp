#include "polargrass/classify.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_set>

#include "parallel.hpp"
#include "polargrass/error.hpp"
#include "polargrass/polargeom.hpp"
#include "polargrass/projgeom.hpp"

namespace polargrass {

std::string to_string(PairKind k) {
  switch (k) {
    case PairKind::plus: return "plus";
    case PairKind::minus: return "minus";
    case PairKind::zero_special: return "zero-special";
    case PairKind::dualpolar: return "dualpolar";
    case PairKind::polarspace: return "polarspace";
    case PairKind::projective: return "projective";
  }
  return "?";
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::parabolic: return "parabolic";
    case Verdict::exceptional_d31: return "exceptional-D31";
    case Verdict::neither: return "neither";
    case Verdict::not_grassmannian: return "not-grassmannian";
    case Verdict::unresolved: return "unresolved";
  }
  return "?";
}

namespace {

bool projective_base(const Geometry& G) { return G.base_kind() == GeometryKind::projective; }

const Form& form_of(const Geometry& G) {
  if (!G.form()) throw InvalidArgument("geometry has no form");
  return *G.form();
}

PairClass classify_algebraic(const Geometry& G, int x, int y) {
  const Field& F = G.field();
  const Subspace& X = G.point(x);
  const Subspace& Y = G.point(y);
  const int k = G.point_dim();
  Subspace meet = intersect(F, X, Y);
  Subspace span = sum(F, X, Y);
  PairClass pc;
  if (projective_base(G)) {
    if (meet.dim() != k - 2) throw Error("internal: distance-2 pair with dim(x cap y) != j-2");
    pc.kind = PairKind::projective;
    pc.upper = span;
    pc.lower = meet;
    return pc;
  }
  const Form& f = form_of(G);
  const bool polar = G.base_kind() == GeometryKind::polar;
  if (polar && (k == 1 || k == G.tags().n)) {
    pc.kind = k == 1 ? PairKind::polarspace : PairKind::dualpolar;
    pc.upper = f.perp(meet);
    pc.lower = meet;
    return pc;
  }
  if (meet.dim() == k - 1) {
    pc.kind = PairKind::plus;
    pc.upper = f.perp(meet);
    pc.lower = meet;
    return pc;
  }
  if (meet.dim() == k - 2 && f.is_totally_isotropic(span)) {
    pc.kind = PairKind::minus;
    pc.upper = span;
    pc.lower = meet;
    return pc;
  }
  if (meet.dim() == k - 2) {
    auto z = G.index_of(f.radical_of(span));
    if (!z) throw Error("internal: radical of x+y is not a point");
    pc.kind = PairKind::zero_special;
    pc.middle = *z;
    return pc;
  }
  throw Error("internal: distance-2 pair outside the trichotomy");
}

struct WitnessKey {
  Subspace upper, lower;
  friend bool operator==(const WitnessKey&, const WitnessKey&) = default;
  friend auto operator<=>(const WitnessKey&, const WitnessKey&) = default;
};

struct WitnessKeyHash {
  std::size_t operator()(const WitnessKey& w) const { return w.upper.hash() * 1000003u ^ w.lower.hash(); }
};

ClassificationReport judge(const Geometry& G, PointSet S, std::string origin, std::optional<Subspace> C,
                           std::optional<Subspace> U) {
  ClassificationReport r;
  r.subject = std::move(S);
  r.origin = std::move(origin);
  r.C = std::move(C);
  r.U = std::move(U);
  r.iso = test_isomorphic_to(G, r.subject, 3, 2);
  if (r.iso.status == IsoStatus::unresolved) {
    r.verdict = Verdict::unresolved;
    return r;
  }
  if (r.iso.status == IsoStatus::no) {
    r.verdict = Verdict::not_grassmannian;
    return r;
  }
  if (!is_subspace(G, r.subject)) {
    r.verdict = Verdict::not_grassmannian;
    return r;
  }
  r.flag = recognize_parabolic(G, r.subject);
  if (r.flag)
    r.verdict = Verdict::parabolic;
  else if (r.C && r.U)
    r.verdict = Verdict::exceptional_d31;
  else
    r.verdict = Verdict::neither;
  return r;
}

// Candidates U with C < U <= C^perp, dim U = dim C + 6, U/C non-degenerate of
// Witt index 3. Returns at most `limit` inspected candidates' reports.
std::vector<ClassificationReport> exceptional_under(const Geometry& G, const Subspace& C, std::size_t limit,
                                                    const std::string& origin) {
  const Form& f = form_of(G);
  const Field& F = G.field();
  Subspace Cp = f.perp(C);
  std::vector<ClassificationReport> out;
  if (Cp.dim() - C.dim() < 6) return out;
  auto Us = subspaces_between(F, C, Cp, C.dim() + 6);
  if (Us.size() > limit) Us.resize(limit);
  for (const auto& U : Us) {
    if (!f.quotient_nondegenerate(U, C)) continue;
    if (f.max_ts_dim(U, C) - C.dim() != 3) continue;
    out.push_back(judge(G, shadow_T(G, U, C), origin, C, U));
  }
  return out;
}

std::size_t candidates_under(const Geometry& G, const Subspace& C) {
  int gap = form_of(G).dim() - 2 * C.dim();
  if (gap < 6) return 0;
  return gaussian_binomial(gap, 6, G.field().order());
}

// Shared driver: visit the given (k-1)-objects in order under a global budget.
void search_exceptional(const Geometry& G, const std::vector<Subspace>& Cs, std::size_t budget, int threads,
                        const std::string& origin, std::vector<ClassificationReport>& reports,
                        std::size_t& candidates, bool& sampled) {
  std::vector<std::size_t> allot(Cs.size(), 0);
  std::size_t left = budget;
  for (std::size_t i = 0; i < Cs.size(); ++i) {
    std::size_t c = candidates_under(G, Cs[i]);
    allot[i] = std::min(c, left);
    if (allot[i] < c) sampled = true;
    left -= allot[i];
    candidates += allot[i];
  }
  std::vector<std::vector<ClassificationReport>> parts(Cs.size());
  detail::parallel_for(Cs.size(), threads, [&](std::size_t i) {
    if (allot[i] > 0) parts[i] = exceptional_under(G, Cs[i], allot[i], origin);
  });
  for (auto& p : parts)
    for (auto& r : p) reports.push_back(std::move(r));
}

}  // namespace

PairClass classify_pair(const Geometry& G, const CollinearityGraph&, const DistanceTable& D, int x, int y) {
  if (D(x, y) != 2) throw InvalidArgument("classify_pair needs points at distance 2");
  return classify_algebraic(G, x, y);
}

PairClass classify_pair(const Geometry& G, int x, int y) {
  if (distances_from(G, x)[y] != 2) throw InvalidArgument("classify_pair needs points at distance 2");
  return classify_algebraic(G, x, y);
}

int trichotomy_matches(const Geometry& G, int x, int y) {
  const Form& f = form_of(G);
  const Field& F = G.field();
  const int k = G.point_dim();
  Subspace meet = intersect(F, G.point(x), G.point(y));
  Subspace span = sum(F, G.point(x), G.point(y));
  int hits = 0;
  if (meet.dim() == k - 1 && f.quotient_nondegenerate(span, meet)) ++hits;
  if (meet.dim() == k - 2 && f.is_totally_isotropic(span)) ++hits;
  if (meet.dim() == k - 2) {
    Subspace rad = f.radical_of(span);
    if (rad.dim() == k && G.index_of(rad)) ++hits;
  }
  return hits;
}

ClassificationReport classify_subspace(const Geometry& G, const PointSet& S) {
  PointSet T = sorted_set(S);
  if (T.empty()) throw InvalidArgument("empty point set");
  std::optional<Subspace> C, U;
  if (G.form() && G.base_kind() != GeometryKind::projective) {
    const Field& F = G.field();
    Subspace lo = G.point(T[0]), hi = G.point(T[0]);
    for (int p : T) {
      lo = intersect(F, lo, G.point(p));
      hi = sum(F, hi, G.point(p));
    }
    const Form& f = *G.form();
    if (hi.dim() == lo.dim() + 6 && f.is_totally_isotropic(lo) && contains(F, f.perp(lo), hi) &&
        f.quotient_nondegenerate(hi, lo) && f.max_ts_dim(hi, lo) - lo.dim() == 3 && shadow_T(G, hi, lo) == T) {
      C = lo;
      U = hi;
    }
  }
  return judge(G, std::move(T), "input", std::move(C), std::move(U));
}

PointSet symp_of_pair(const Geometry& G, const PairClass& pc) {
  if (pc.kind == PairKind::zero_special) throw InvalidArgument("a special pair lies in no symp");
  if (pc.kind == PairKind::projective) return shadow_S(G, pc.upper, pc.lower);
  return shadow_T(G, pc.upper, pc.lower);
}

PointSet symp_of_pair(const Geometry& G, const CollinearityGraph& g, const DistanceTable& D, int x, int y) {
  return symp_of_pair(G, classify_pair(G, g, D, x, y));
}

std::optional<FlagWitness> recognize_parabolic(const Geometry& G, const PointSet& S) {
  if (S.empty()) throw InvalidArgument("recognize_parabolic needs a non-empty set");
  if (!is_subspace(G, S)) throw InvalidArgument("recognize_parabolic needs a subspace");
  const Field& F = G.field();
  Subspace E = G.point(S[0]);
  Subspace span = G.point(S[0]);
  for (int p : S) {
    E = intersect(F, E, G.point(p));
    span = sum(F, span, G.point(p));
  }
  if (projective_base(G)) {
    if (shadow_S(G, span, E) == S) return FlagWitness{E, span, false};
    return std::nullopt;
  }
  const Form& f = form_of(G);
  if (f.is_totally_isotropic(span) && shadow_T(G, span, E) == S) return FlagWitness{E, span, false};
  Subspace Ep = f.perp(E);
  if (shadow_T(G, Ep, E) == S) return FlagWitness{E, Ep, true};
  return std::nullopt;
}

ExceptionalSearch find_exceptional_A32(const Geometry& G, std::size_t candidate_budget) {
  ExceptionalSearch out;
  if (!G.form() || !G.form()->is_orthogonal() || G.base_kind() != GeometryKind::polar) return out;
  const int k = G.point_dim();
  if (k >= G.tags().n) return out;
  const Form& f = *G.form();
  std::vector<Subspace> Cs;
  if (k == 1)
    Cs.push_back(Subspace::zero(f.dim()));
  else
    Cs = enumerate_ti(f, k - 1);
  search_exceptional(G, Cs, candidate_budget, 0, "exceptional-search", out.reports, out.candidates, out.sampled);
  return out;
}

A32Enumeration enumerate_A32_subspaces(const Geometry& G, std::size_t candidate_budget, int threads) {
  A32Enumeration out;
  CollinearityGraph g(G);
  DistanceTable D(g, 8000, threads);
  const std::size_t N = G.num_points();

  struct Part {
    std::size_t pairs = 0, special = 0;
    std::unordered_set<WitnessKey, WitnessKeyHash> minus, plus;
  };
  const int nt = detail::resolve_threads(threads);
  std::vector<Part> parts(static_cast<std::size_t>(nt));
  // Each x goes to a fixed part so the merged result does not depend on scheduling.
  detail::parallel_for(static_cast<std::size_t>(nt), nt, [&](std::size_t t) {
    Part& P = parts[t];
    for (std::size_t x = t; x < N; x += static_cast<std::size_t>(nt)) {
      auto row = D.row_shared(static_cast<int>(x));
      for (std::size_t y = x + 1; y < N; ++y) {
        if ((*row)[y] != 2) continue;
        ++P.pairs;
        PairClass pc = classify_algebraic(G, static_cast<int>(x), static_cast<int>(y));
        switch (pc.kind) {
          case PairKind::zero_special: ++P.special; break;
          case PairKind::minus:
          case PairKind::projective: P.minus.insert({pc.upper, pc.lower}); break;
          default: P.plus.insert({pc.upper, pc.lower}); break;
        }
      }
    }
  });
  std::set<WitnessKey> minus, plus;
  for (auto& P : parts) {
    out.pairs_at_distance_two += P.pairs;
    out.special_pairs += P.special;
    minus.insert(P.minus.begin(), P.minus.end());
    plus.insert(P.plus.begin(), P.plus.end());
  }
  out.minus_symps = minus.size();
  out.plus_symps = plus.size();

  std::vector<WitnessKey> mv(minus.begin(), minus.end());
  std::vector<ClassificationReport> mreports(mv.size());
  detail::parallel_for(mv.size(), threads, [&](std::size_t i) {
    PointSet S = projective_base(G) ? shadow_S(G, mv[i].upper, mv[i].lower) : shadow_T(G, mv[i].upper, mv[i].lower);
    mreports[i] = judge(G, std::move(S), "minus-symp", std::nullopt, std::nullopt);
  });
  for (auto& r : mreports) out.reports.push_back(std::move(r));

  if (!projective_base(G) && !plus.empty()) {
    const Form& f = form_of(G);
    std::vector<Subspace> Cs;
    for (const auto& w : plus) {
      int rank = f.max_ts_dim(w.upper, w.lower) - w.lower.dim();
      if (rank == 2) ++out.rank_two_symps;
      if (rank >= 3) Cs.push_back(w.lower);
    }
    std::size_t candidates = 0;
    search_exceptional(G, Cs, candidate_budget, threads, "plus-symp", out.reports, candidates, out.sampled);
  }
  return out;
}

NoA53Report verify_lemma_no_A53(const Geometry& G, const CollinearityGraph& g, const DistanceTable& D, int x,
                                int y) {
  if (G.base_kind() != GeometryKind::oriflamme) throw InvalidArgument("verify_lemma_no_A53 needs a D_{n,n-2} geometry");
  const int k = G.point_dim();
  const int dxy = D(x, y);
  if (dxy != 2 && dxy != 3) throw InvalidArgument("verify_lemma_no_A53 needs points at distance 2 or 3");
  NoA53Report rep;
  rep.relation = d_nminus2_label(k, signature_of(G, x, y, dxy)).value_or("?");

  PointSet C;
  for (int u : g.neighbors(y)) {
    if (D(x, u) != 2) continue;
    auto lab = d_nminus2_label(k, signature_of(G, x, u, 2));
    if (lab && (*lab == "2g" || *lab == "2q")) C.push_back(u);
  }
  std::sort(C.begin(), C.end());
  rep.middle_size = C.size();
  auto in_C = [&](int p) { return std::binary_search(C.begin(), C.end(), p); };
  auto common_neighbours = [&] {
    std::vector<int> out;
    for (int u : g.neighbors(x))
      if (g.adjacent(u, y)) out.push_back(u);
    return out;
  };

  auto z = common_neighbours();
  auto on_line = [&](int l, int p) {
    auto pts = G.line(l);
    return std::find(pts.begin(), pts.end(), p) != pts.end();
  };

  // Full lines and planes inside C.
  std::set<int> seen;
  std::vector<int> full;
  for (int u : C)
    for (int l : G.lines_through(u)) {
      if (!seen.insert(l).second) continue;
      auto pts = G.line(l);
      if (std::all_of(pts.begin(), pts.end(), in_C)) full.push_back(l);
    }
  rep.full_lines = full.size();
  if (!full.empty()) {
    std::set<PointSet> planes;
    for (int l : full) {
      auto pts = G.line(l);
      for (int w : C) {
        if (on_line(l, w)) continue;
        if (!std::all_of(pts.begin(), pts.end(), [&](int p) { return g.adjacent(p, w); })) continue;
        PointSet gen(pts.begin(), pts.end());
        gen.push_back(w);
        PointSet P = subspace_closure(G, sorted_set(gen));
        if (std::all_of(P.begin(), P.end(), in_C)) planes.insert(P);
      }
    }
    rep.planes = planes.size();
  }

  // Union of punctured lines through the unique common neighbour.
  if (z.size() == 1 && !C.empty()) {
    std::set<int> lines;
    bool ok = true;
    for (int u : C) {
      auto l = G.common_line(u, z[0]);
      if (!l) {
        ok = false;
        break;
      }
      lines.insert(*l);
    }
    std::size_t covered = 0;
    for (int l : lines) covered += G.line(l).size() - 1;
    if (ok && covered == C.size()) rep.punctured_lines = lines.size();
  }

  const std::string& r = rep.relation;
  if (r == "3q" || r == "3hh") {
    rep.passed = C.empty();
    rep.detail = "C empty";
  } else if (r == "3h") {
    bool one_line = C.size() <= 1;
    if (C.size() >= 2)
      if (auto l = G.common_line(C[0], C[1]))
        one_line = std::all_of(C.begin(), C.end(), [&](int p) { return on_line(*l, p); });
    rep.passed = one_line && !C.empty();
    rep.detail = "C on one line";
  } else if (r == "2s") {
    PointSet isolated, rest;
    for (int u : C) {
      bool alone = std::none_of(C.begin(), C.end(), [&](int v) { return v != u && g.adjacent(u, v); });
      (alone ? isolated : rest).push_back(u);
    }
    bool punctured = false;
    if (z.size() == 1 && !rest.empty())
      for (int l : G.lines_through(z[0])) {
        PointSet pts;
        for (int p : G.line(l))
          if (p != z[0]) pts.push_back(p);
        std::sort(pts.begin(), pts.end());
        if (pts == rest) punctured = true;
      }
    rep.passed = isolated.size() == 2 && punctured;
    rep.detail = "two isolated points plus a punctured line: isolated=" + std::to_string(isolated.size()) +
                 " punctured_line=" + (punctured ? "yes" : "no");
  } else if (r == "2q") {
    bool via = true;
    for (std::size_t a = 0; a < C.size() && via; ++a)
      for (std::size_t b = a + 1; b < C.size() && via; ++b) {
        if (!g.adjacent(C[a], C[b])) continue;
        auto l = *G.common_line(C[a], C[b]);
        via = std::any_of(z.begin(), z.end(), [&](int p) { return on_line(l, p); });
      }
    rep.passed = via && rep.planes == 0;
    rep.detail = std::string("lines through two points of C meet a common neighbour: ") + (via ? "yes" : "no");
  } else if (r == "2g") {
    rep.passed = rep.full_lines == 0;
    rep.detail = "no full line in C";
  } else {
    rep.passed = false;
    rep.detail = "relation outside the description";
  }
  return rep;
}

MainTheoremReport verify_main_theorem(const Geometry& G, std::size_t candidate_budget, int threads) {
  MainTheoremReport rep;
  const auto& t = G.tags();
  rep.geometry = t.type + "_{" + std::to_string(t.type == "A" ? t.m : t.n) + "," +
                 std::to_string(t.type == "A" ? t.j : t.k) + "}(" + std::to_string(t.q) + ")";
  A32Enumeration en = enumerate_A32_subspaces(G, candidate_budget, threads);
  rep.sampled = en.sampled;
  const Form* f = G.form();
  const bool polar = G.base_kind() == GeometryKind::polar;
  const int k = G.point_dim();
  rep.exceptional_allowed = polar && f && f->is_orthogonal() && k <= t.n - 2;

  std::set<PointSet> exceptional_subjects;
  for (const auto& r : en.reports) {
    if (r.iso.status == IsoStatus::yes) ++rep.a32_found;
    switch (r.verdict) {
      case Verdict::parabolic: ++rep.parabolic; break;
      case Verdict::exceptional_d31:
        ++rep.exceptional;
        exceptional_subjects.insert(r.subject);
        break;
      case Verdict::neither: ++rep.neither; break;
      case Verdict::unresolved: ++rep.unresolved; break;
      case Verdict::not_grassmannian: break;
    }
    if (r.verdict == Verdict::parabolic) {
      ++rep.flags_checked;
      PointSet back = r.flag->residue ? shadow_T(G, r.flag->F, r.flag->E)
                                      : (projective_base(G) ? shadow_S(G, r.flag->F, r.flag->E)
                                                            : parabolic_subspace(G, r.flag->E, r.flag->F).points);
      if (back == r.subject) ++rep.flags_recognized;
    }
  }

  // Round trip on a sample of flags E < F with dim E <= k-1 < k+1 <= dim F.
  if (f && !projective_base(G)) {
    const int top = polar ? t.n : t.n;
    auto levels = enumerate_ti_levels(*f, top);
    for (int fd = k + 1; fd <= top; ++fd) {
      const auto& Fs = levels[fd];
      for (std::size_t i = 0; i < Fs.size() && i < 12; ++i)
        for (int e = 0; e <= k - 1; ++e) {
          auto Es = subspaces_between(G.field(), Subspace::zero(f->dim()), Fs[i], e);
          for (std::size_t a = 0; a < Es.size() && a < 3; ++a) {
            PointSet S = parabolic_subspace(G, Es[a], Fs[i]).points;
            if (S.empty()) continue;
            ++rep.flags_checked;
            auto w = recognize_parabolic(G, S);
            if (!w) continue;
            PointSet back = w->residue ? shadow_T(G, w->F, w->E) : parabolic_subspace(G, w->E, w->F).points;
            if (back == S) ++rep.flags_recognized;
          }
        }
    }
  }

  bool cross_ok = true;
  if (rep.exceptional_allowed) {
    ExceptionalSearch xs = find_exceptional_A32(G, candidate_budget);
    std::set<PointSet> direct;
    for (const auto& r : xs.reports)
      if (r.verdict == Verdict::exceptional_d31) direct.insert(r.subject);
    if (!xs.sampled && !en.sampled) cross_ok = direct == exceptional_subjects;
    rep.sampled = rep.sampled || xs.sampled;
    rep.rows.push_back("exceptional-search\tcandidates=" + std::to_string(xs.candidates) +
                       "\texceptional=" + std::to_string(direct.size()) + "\tagrees=" + (cross_ok ? "yes" : "no"));
  }
  const bool dual = polar && k == t.n;
  rep.rows.push_back("pairs-at-distance-2\t" + std::to_string(en.pairs_at_distance_two));
  rep.rows.push_back("special-pairs\t" + std::to_string(en.special_pairs));
  rep.rows.push_back("minus-symps\t" + std::to_string(en.minus_symps));
  rep.rows.push_back("plus-symps\t" + std::to_string(en.plus_symps));
  rep.rows.push_back("rank-2-symps\t" + std::to_string(en.rank_two_symps));
  rep.rows.push_back("a32-found\t" + std::to_string(rep.a32_found));
  rep.rows.push_back("parabolic\t" + std::to_string(rep.parabolic));
  rep.rows.push_back("exceptional\t" + std::to_string(rep.exceptional));
  rep.rows.push_back("neither\t" + std::to_string(rep.neither));
  rep.rows.push_back("unresolved\t" + std::to_string(rep.unresolved));
  rep.rows.push_back("flags\t" + std::to_string(rep.flags_recognized) + "/" + std::to_string(rep.flags_checked));
  rep.passed = rep.neither == 0 && rep.unresolved == 0 && (rep.exceptional == 0 || rep.exceptional_allowed) &&
               rep.flags_recognized == rep.flags_checked && cross_ok && (!dual || rep.a32_found == 0);
  return rep;
}

DualPolarCorrespondence dual_polar_correspondence(const Geometry& G) {
  if (G.base_kind() != GeometryKind::polar || !G.form())
    throw InvalidArgument("dual_polar_correspondence needs a polar Grassmannian");
  const Form& f = *G.form();
  const Field& F = G.field();
  const int n = G.tags().n;
  const int k = G.point_dim();
  const int q = F.order();
  if (k < 2 || k > n - 1) throw InvalidArgument("dual_polar_correspondence needs 2 <= k <= n-1");
  DualPolarCorrespondence out;
  auto Bs = enumerate_ti(f, n);
  out.maximal_spaces = Bs.size();
  std::vector<PointSet> shadows(Bs.size());
  for (std::size_t i = 0; i < Bs.size(); ++i) shadows[i] = shadow_T(G, Bs[i], Subspace::zero(f.dim()));
  std::set<PointSet> image(shadows.begin(), shadows.end());
  out.distinct_shadows = image.size();
  out.injective = image.size() == Bs.size();

  // Independent search for subspaces of type A_{n-1,k}.
  std::set<PointSet> found;
  if (k == n - 1) {
    CollinearityGraph g(G);
    const std::size_t target = gaussian_binomial(n, k, q);
    auto clique = [&](const PointSet& S) {
      for (std::size_t a = 0; a < S.size(); ++a)
        for (std::size_t b = a + 1; b < S.size(); ++b)
          if (!g.adjacent(S[a], S[b])) return false;
      return true;
    };
    std::set<PointSet> frontier;
    for (std::size_t l = 0; l < G.num_lines(); ++l) {
      auto pts = G.line(static_cast<int>(l));
      frontier.insert(PointSet(pts.begin(), pts.end()));
    }
    while (!frontier.empty()) {
      std::set<PointSet> next;
      for (const auto& S : frontier) {
        if (S.size() == target) {
          if (test_isomorphic_to(G, S, n - 1, k).status == IsoStatus::yes) found.insert(S);
          continue;
        }
        std::vector<int> common;
        for (int z : g.neighbors(S[0]))
          if (!std::binary_search(S.begin(), S.end(), z) &&
              std::all_of(S.begin() + 1, S.end(), [&](int p) { return g.adjacent(p, z); }))
            common.push_back(z);
        for (int z : common) {
          PointSet T = S;
          T.insert(std::lower_bound(T.begin(), T.end(), z), z);
          T = subspace_closure(G, T);
          if (T.size() <= target && clique(T)) next.insert(T);
        }
      }
      frontier = std::move(next);
    }
  } else if (n - 1 == 3 && k == 2) {
    for (const auto& r : enumerate_A32_subspaces(G).reports)
      if (r.iso.status == IsoStatus::yes) found.insert(r.subject);
  } else {
    throw Unsupported("independent A_{n-1,k} search is implemented for k = n-1 and (n,k) = (4,2)");
  }
  out.a_type_subspaces = found.size();
  out.image_matches = found == image;

  out.intersections_ok = true;
  out.lines_ok = true;
  std::set<PointSet> line_images;
  for (std::size_t a = 0; a < Bs.size(); ++a)
    for (std::size_t b = a + 1; b < Bs.size(); ++b) {
      ++out.pairs_checked;
      Subspace M = intersect(F, Bs[a], Bs[b]);
      PointSet I;
      std::set_intersection(shadows[a].begin(), shadows[a].end(), shadows[b].begin(), shadows[b].end(),
                            std::back_inserter(I));
      std::size_t expect = M.dim() >= k ? gaussian_binomial(M.dim(), k, q) : 0;
      bool inside = std::all_of(I.begin(), I.end(), [&](int p) { return contains(F, M, G.point(p)); });
      if (I.size() != expect || !inside) out.intersections_ok = false;
      const bool line_pair = M.dim() == n - 1;
      const bool line_type = !I.empty() && I.size() == gaussian_binomial(n - 1, k, q);
      if (line_pair != line_type) out.lines_ok = false;
      if (line_pair) {
        ++out.line_pairs;
        line_images.insert(I);
        if (n - 1 > k && test_isomorphic_to(G, I, n - 2, k).status != IsoStatus::yes) out.lines_ok = false;
      }
    }
  if (line_images.size() != enumerate_ti(f, n - 1).size()) out.lines_ok = false;
  out.passed = out.injective && out.image_matches && out.intersections_ok && out.lines_ok;
  return out;
}

}  // namespace polargrass
