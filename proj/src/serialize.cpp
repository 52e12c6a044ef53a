#include "polargrass/serialize.hpp"

#include <map>
#include <sstream>

#include "polargrass/error.hpp"
#include "polargrass/polargeom.hpp"

namespace polargrass {

Json to_json(const Field& F) {
  return Json{{"p", F.characteristic()}, {"degree", F.degree()}, {"q", F.order()}, {"modulus", F.modulus()}};
}

Json to_json(const Subspace& S) {
  Json basis = Json::array();
  for (int i = 0; i < S.dim(); ++i) {
    Json row = Json::array();
    for (Elem e : S.row(i)) row.push_back(static_cast<int>(e));
    basis.push_back(std::move(row));
  }
  return Json{{"dim", S.dim()}, {"basis", std::move(basis)}};
}

Subspace subspace_from_json(const Field& F, int ambient, const Json& j) {
  std::vector<Vector> rows;
  for (const auto& r : j.at("basis")) {
    Vector v;
    for (const auto& c : r) {
      int code = c.get<int>();
      if (code < 0 || code >= F.order()) throw InvalidArgument("coefficient outside the field");
      v.push_back(static_cast<Elem>(code));
    }
    if (static_cast<int>(v.size()) != ambient) throw InvalidArgument("basis row has the wrong length");
    rows.push_back(std::move(v));
  }
  Subspace S = canonicalize(F, ambient, rows);
  if (j.contains("dim") && j.at("dim").get<int>() != S.dim()) throw InvalidArgument("basis rows are dependent");
  return S;
}

Json to_json(const Form& f) {
  Json gram = Json::array();
  for (int i = 0; i < f.dim(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < f.dim(); ++j) row.push_back(static_cast<int>(f.gram(i, j)));
    gram.push_back(std::move(row));
  }
  Json quad = nullptr;
  if (f.is_orthogonal()) {
    quad = Json::array();
    for (Elem e : f.quad()) quad.push_back(static_cast<int>(e));
  }
  return Json{{"kind", to_string(f.kind())}, {"n", f.rank()}, {"dim", f.dim()},
              {"gram", std::move(gram)}, {"quad", std::move(quad)}, {"field", to_json(f.field())}};
}

Json to_json(const GeometryTags& t) {
  Json j{{"type", t.type}};
  if (t.type == "A") {
    j["m"] = t.m;
    j["j"] = t.j;
  } else {
    j["n"] = t.n;
    j["k"] = t.k;
  }
  j["q"] = t.q;
  return j;
}

Json to_json(const Geometry& G) {
  Json pts = Json::array();
  for (const auto& p : G.points()) pts.push_back(to_json(p));
  Json lines = Json::array();
  for (std::size_t l = 0; l < G.num_lines(); ++l) {
    auto ln = G.line(static_cast<int>(l));
    lines.push_back(std::vector<int>(ln.begin(), ln.end()));
  }
  return Json{{"tags", to_json(G.tags())},
              {"kind", to_string(G.kind())},
              {"base_kind", to_string(G.base_kind())},
              {"field", to_json(G.field())},
              {"form", G.form() ? to_json(*G.form()) : Json(nullptr)},
              {"ambient_dim", G.ambient_dim()},
              {"point_dim", G.point_dim()},
              {"thin", G.is_thin()},
              {"num_points", G.num_points()},
              {"num_lines", G.num_lines()},
              {"points", std::move(pts)},
              {"lines", std::move(lines)}};
}

namespace {

GeometryKind kind_from_string(const std::string& s) {
  for (auto k : {GeometryKind::projective, GeometryKind::polar, GeometryKind::oriflamme, GeometryKind::induced})
    if (to_string(k) == s) return k;
  throw InvalidArgument("unknown geometry kind '" + s + "'");
}

}  // namespace

Geometry geometry_from_json(const Json& j) {
  const auto& fj = j.at("field");
  FieldPtr F = Field::make(fj.at("p").get<int>(), fj.at("degree").get<int>());
  std::shared_ptr<const Form> form;
  if (!j.at("form").is_null()) {
    const auto& f = j.at("form");
    const int dim = f.at("dim").get<int>();
    std::vector<Elem> gram, quad;
    for (const auto& row : f.at("gram"))
      for (const auto& c : row) gram.push_back(static_cast<Elem>(c.get<int>()));
    if (!f.at("quad").is_null())
      for (const auto& c : f.at("quad")) quad.push_back(static_cast<Elem>(c.get<int>()));
    form = std::make_shared<const Form>(Form::custom(form_kind_from_string(f.at("kind").get<std::string>()),
                                                     f.at("n").get<int>(), F, dim, gram, quad));
  }
  GeometryTags tags;
  const auto& tj = j.at("tags");
  tags.type = tj.at("type").get<std::string>();
  tags.n = tj.value("n", 0);
  tags.k = tj.value("k", 0);
  tags.m = tj.value("m", 0);
  tags.j = tj.value("j", 0);
  tags.q = tj.at("q").get<int>();
  const int ambient = j.at("ambient_dim").get<int>();
  std::vector<Subspace> pts;
  for (const auto& p : j.at("points")) pts.push_back(subspace_from_json(*F, ambient, p));
  std::vector<std::vector<int>> lines;
  for (const auto& l : j.at("lines")) lines.push_back(l.get<std::vector<int>>());
  GeometryKind kind = kind_from_string(j.at("kind").get<std::string>());
  if (kind == GeometryKind::induced) kind = kind_from_string(j.value("base_kind", std::string("polar")));
  return Geometry(F, form, kind, tags, std::move(pts), std::move(lines), j.value("thin", false));
}

Json to_json(const DistanceClassReport& rep, const DistributionDiagram& dia) {
  Json classes = Json::object();
  for (std::size_t i = 0; i < dia.labels.size(); ++i) classes[dia.labels[i]] = dia.sizes[i];
  Json edges = Json::array();
  for (std::size_t i = 0; i < dia.labels.size(); ++i)
    for (std::size_t j = 0; j < dia.labels.size(); ++j)
      if (i == j || dia.n[i][j] != 0) edges.push_back(Json::array({dia.labels[i], dia.labels[j], dia.n[i][j]}));
  Json sigs = Json::array();
  for (const auto& c : rep.classes)
    sigs.push_back(Json{{"label", c.label},
                        {"distance", c.signature.distance},
                        {"meet_dim", c.signature.meet_dim},
                        {"meet_perp_dim", c.signature.meet_perp_dim},
                        {"span_ts", c.signature.span_ts},
                        {"members", c.members}});
  return Json{{"base", rep.base},
              {"refined", rep.refined},
              {"labels", dia.labels},
              {"classes", std::move(classes)},
              {"degree", dia.degree},
              {"equitable", dia.equitable},
              {"double_counting", dia.double_counting},
              {"edges", std::move(edges)},
              {"signatures", std::move(sigs)}};
}

Json to_json(const PairClass& pc) {
  Json j{{"kind", to_string(pc.kind)}};
  if (pc.kind == PairKind::zero_special) {
    j["middle"] = pc.middle;
  } else {
    j["upper"] = to_json(pc.upper);
    j["lower"] = to_json(pc.lower);
  }
  return j;
}

Json to_json(const IsoResult& r) {
  return Json{{"status", to_string(r.status)}, {"m", r.m}, {"j", r.j}, {"reason", r.reason}, {"witness", r.witness}};
}

Json to_json(const ClassificationReport& r) {
  Json j{{"verdict", to_string(r.verdict)}, {"origin", r.origin}, {"size", r.subject.size()}, {"subject", r.subject}};
  j["iso"] = to_json(r.iso);
  if (r.flag)
    j["flag"] = Json{{"E", to_json(r.flag->E)}, {"F", to_json(r.flag->F)}, {"residue", r.flag->residue}};
  else
    j["flag"] = nullptr;
  j["C"] = r.C ? to_json(*r.C) : Json(nullptr);
  j["U"] = r.U ? to_json(*r.U) : Json(nullptr);
  j["checks"] = Json{{"parabolic_and_exceptional", r.flag.has_value() && r.verdict == Verdict::exceptional_d31}};
  return j;
}

Json to_json(const A32Enumeration& e) {
  Json reps = Json::array();
  for (const auto& r : e.reports) reps.push_back(to_json(r));
  return Json{{"pairs_at_distance_two", e.pairs_at_distance_two},
              {"special_pairs", e.special_pairs},
              {"plus_symps", e.plus_symps},
              {"minus_symps", e.minus_symps},
              {"rank_two_symps", e.rank_two_symps},
              {"sampled", e.sampled},
              {"reports", std::move(reps)}};
}

Json to_json(const NoA53Report& r) {
  return Json{{"relation", r.relation},         {"middle_size", r.middle_size},
              {"passed", r.passed},             {"full_lines", r.full_lines},
              {"planes", r.planes},             {"punctured_lines", r.punctured_lines},
              {"detail", r.detail}};
}

Json to_json(const MainTheoremReport& r) {
  return Json{{"geometry", r.geometry},
              {"a32_found", r.a32_found},
              {"parabolic", r.parabolic},
              {"exceptional", r.exceptional},
              {"neither", r.neither},
              {"unresolved", r.unresolved},
              {"flags_checked", r.flags_checked},
              {"flags_recognized", r.flags_recognized},
              {"exceptional_allowed", r.exceptional_allowed},
              {"sampled", r.sampled},
              {"passed", r.passed},
              {"rows", r.rows}};
}

Json to_json(const DualPolarCorrespondence& r) {
  return Json{{"maximal_spaces", r.maximal_spaces},
              {"distinct_shadows", r.distinct_shadows},
              {"a_type_subspaces", r.a_type_subspaces},
              {"pairs_checked", r.pairs_checked},
              {"line_pairs", r.line_pairs},
              {"injective", r.injective},
              {"image_matches", r.image_matches},
              {"intersections_ok", r.intersections_ok},
              {"lines_ok", r.lines_ok},
              {"passed", r.passed}};
}

std::string to_dot(const Geometry& G) {
  std::ostringstream os;
  os << "graph collinearity {\n  node [shape=point];\n";
  for (std::size_t p = 0; p < G.num_points(); ++p) os << "  " << p << ";\n";
  for (std::size_t l = 0; l < G.num_lines(); ++l) {
    auto ln = G.line(static_cast<int>(l));
    for (std::size_t a = 0; a < ln.size(); ++a)
      for (std::size_t b = a + 1; b < ln.size(); ++b) os << "  " << ln[a] << " -- " << ln[b] << ";\n";
  }
  os << "}\n";
  return os.str();
}

std::string to_dot(const DistributionDiagram& dia) {
  // Grid positions of the nine D_{5,3} classes; other labels fall back to a row per distance.
  static const std::map<std::string, std::pair<int, int>> grid = {
      {"0", {0, 2}},  {"1", {1, 2}},  {"2g", {2, 2}}, {"2q", {0, 1}}, {"2s", {1, 1}},
      {"3h", {2, 1}}, {"3q", {0, 0}}, {"3hh", {1, 0}}, {"4", {2, 0}}};
  std::ostringstream os;
  os << "graph diagram {\n  node [shape=circle];\n";
  for (std::size_t i = 0; i < dia.labels.size(); ++i) {
    const auto& l = dia.labels[i];
    os << "  \"C" << l << "\" [label=\"" << dia.sizes[i] << "\", xlabel=\"C_" << l << "\"";
    if (auto it = grid.find(l); it != grid.end())
      os << ", pos=\"" << it->second.first * 100 << "," << it->second.second * 100 << "!\"";
    if (dia.n[i][i] != 0) os << ", tooltip=\"loop " << dia.n[i][i] << "\"";
    os << "];\n";
  }
  for (std::size_t i = 0; i < dia.labels.size(); ++i)
    for (std::size_t j = i + 1; j < dia.labels.size(); ++j)
      if (dia.n[i][j] != 0)
        os << "  \"C" << dia.labels[i] << "\" -- \"C" << dia.labels[j] << "\" [taillabel=\"" << dia.n[i][j]
           << "\", headlabel=\"" << dia.n[j][i] << "\"];\n";
  os << "}\n";
  return os.str();
}

std::string to_tsv(const std::vector<ClassificationReport>& reports) {
  std::ostringstream os;
  os << "index\tsize\tverdict\torigin\tiso\n";
  for (std::size_t i = 0; i < reports.size(); ++i) {
    const auto& r = reports[i];
    os << i << '\t' << r.subject.size() << '\t' << to_string(r.verdict) << '\t' << r.origin << '\t'
       << to_string(r.iso.status);
    if (r.iso.status == IsoStatus::yes) os << " A_{" << r.iso.m << "," << r.iso.j << "}";
    os << '\n';
  }
  return os.str();
}

}  // namespace polargrass
