#include "polargrass/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>

#include "polargrass/analysis.hpp"
#include "polargrass/classify.hpp"
#include "polargrass/error.hpp"
#include "polargrass/lemmas.hpp"
#include "polargrass/polargeom.hpp"
#include "polargrass/projgeom.hpp"
#include "polargrass/serialize.hpp"

namespace polargrass {

namespace {

struct Options {
  std::string type;
  int n = 0;
  int k = 0;
  int q = 0;
  int base = 0;
  int threads = 0;
  std::size_t budget = 200'000;
  std::string out;
  std::string in;
  std::string diagram;
  std::string format = "json";
  std::string lemma;
  std::string golden;
  int criterion = 0;
  bool all = false;
  bool desk = false;
  bool list = false;
  bool verbose = false;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string geometry_title(const GeometryTags& t) {
  std::ostringstream s;
  if (t.type == "A")
    s << "A_{" << t.m << "," << t.j << "}(" << t.q << ")";
  else
    s << (t.type == "D-nminus2" ? std::string("D") : t.type) << "_{" << t.n << "," << t.k << "}(" << t.q << ")";
  return s.str();
}

void require_geometry(const Options& o) {
  if (o.type.empty() || o.n <= 0 || o.k <= 0 || o.q <= 0)
    throw UsageError("--type, --n, --k and --q are required");
}

Geometry build_from(const Options& o) {
  require_geometry(o);
  return build_geometry(o.type, o.n, o.k, o.q);
}

void write_text(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InvalidArgument("cannot write " + path);
  f << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json read_json(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw InvalidArgument("cannot read " + path);
  try {
    return Json::parse(f);
  } catch (const Json::exception& e) {
    throw InvalidArgument(path + ": " + e.what());
  }
}

std::string joined(const std::vector<std::size_t>& v) {
  std::string s;
  for (auto x : v) s += (s.empty() ? "" : ",") + std::to_string(x);
  return s;
}

// ---------------------------------------------------------------------------

int cmd_build(const Options& o, std::ostream& out) {
  Geometry G = build_from(o);
  std::string text = o.format == "dot" ? to_dot(G) : dump(to_json(G));
  write_text(o.out, text, out);
  if (!o.out.empty())
    out << geometry_title(G.tags()) << ": " << G.num_points() << " points, " << G.num_lines() << " lines\n";
  return kExitOk;
}

int cmd_distances(const Options& o, std::ostream& out) {
  Geometry G = o.in.empty() ? build_from(o) : geometry_from_json(read_json(o.in));
  if (o.base < 0 || static_cast<std::size_t>(o.base) >= G.num_points()) throw UsageError("--base out of range");
  CollinearityGraph g(G);
  auto d = distances_from(g, o.base);
  std::map<int, std::size_t> hist;
  int ecc = 0;
  for (auto x : d) {
    if (x == kUnreachable) continue;
    ++hist[x];
    ecc = std::max(ecc, static_cast<int>(x));
  }
  Json j;
  j["geometry"] = to_json(G.tags());
  j["base"] = o.base;
  j["base_point"] = to_json(G.point(o.base));
  j["eccentricity"] = ecc;
  if (G.num_points() <= 8000) {
    DistanceTable D(g, 8000, o.threads);
    j["diameter"] = graph_diameter(D);
  } else {
    j["diameter"] = nullptr;
  }
  Json h = Json::object();
  for (auto [k, v] : hist) h[std::to_string(k)] = v;
  j["histogram"] = h;
  std::vector<int> dv(d.begin(), d.end());
  for (auto& x : dv)
    if (x == kUnreachable) x = -1;
  j["distances"] = dv;
  write_text(o.out, dump(j), out);
  return kExitOk;
}

struct ApartmentResult {
  Geometry A;
  int base;
};

ApartmentResult make_apartment(const Options& o) {
  require_geometry(o);
  if (o.type == "A") {
    Geometry G = build_proj_grassmannian(o.n, o.k, Field::from_order(o.q));
    std::vector<Vector> basis;
    for (int i = 0; i <= o.n; ++i) {
      Vector v(static_cast<std::size_t>(o.n + 1), 0);
      v[static_cast<std::size_t>(i)] = 1;
      basis.push_back(v);
    }
    Geometry A = apartment_proj(G, basis);
    std::vector<Vector> rows(basis.begin(), basis.begin() + o.k);
    int base = *A.index_of(canonicalize(A.field(), o.n + 1, rows));
    return {std::move(A), base};
  }
  auto form = form_for_type(o.type, o.n, o.q);
  Frame fr = form->standard_frame();
  const bool orifl = o.type == "D-nminus2" || (o.type == "D" && o.k == o.n - 2 && o.k >= 2);
  if (!orifl && o.type == "D" && o.k >= o.n - 1)
    throw InvalidArgument("hyperbolic type builds k = 1 or k <= n-3, or k = n-2 as D_{n,n-2}");
  Geometry A = orifl ? oriflamme_apartment(o.n, o.q)
                     : build_apartment(form, GeometryKind::polar, o.k, fr, GeometryTags{o.type, o.n, o.k, 0, 0, o.q});
  std::vector<Vector> rows;
  for (int i = 0; i < A.point_dim(); ++i) rows.push_back(fr.pairs[static_cast<std::size_t>(i)].first);
  int base = *A.index_of(canonicalize(A.field(), form->dim(), rows));
  return {std::move(A), base};
}

int cmd_apartment(const Options& o, std::ostream& out) {
  auto [A, base] = make_apartment(o);
  auto [rep, dia] = distance_distribution(A, base, true);
  if (!o.out.empty()) write_text(o.out, dump(to_json(A)), out);
  if (!o.diagram.empty()) {
    std::string text = o.format == "dot" ? to_dot(dia) : dump(to_json(rep, dia));
    write_text(o.diagram, text, out);
  }
  std::size_t total = 0;
  for (auto s : dia.sizes) total += s;
  std::string labels;
  for (const auto& l : dia.labels) labels += (labels.empty() ? "" : ",") + l;
  out << "apartment of " << geometry_title(A.tags()) << ": " << total << " points, " << dia.labels.size()
      << " classes\n";
  out << "labels\t" << labels << "\n";
  out << "sizes\t" << joined(dia.sizes) << "\n";
  out << "equitable\t" << (dia.equitable ? "yes" : "no") << "\n";
  out << "double_counting\t" << (dia.double_counting ? "yes" : "no") << "\n";
  return kExitOk;
}

int cmd_symps(const Options& o, std::ostream& out) {
  Geometry G = build_from(o);
  CollinearityGraph g(G);
  DistanceTable D(g, 8000, o.threads);
  std::map<std::pair<Subspace, Subspace>, std::pair<PairKind, std::size_t>> symps;
  std::size_t pairs = 0, special = 0;
  for (std::size_t x = 0; x < G.num_points(); ++x)
    for (std::size_t y = x + 1; y < G.num_points(); ++y) {
      if (D(static_cast<int>(x), static_cast<int>(y)) != 2) continue;
      ++pairs;
      PairClass pc = classify_pair(G, g, D, static_cast<int>(x), static_cast<int>(y));
      if (pc.kind == PairKind::zero_special) {
        ++special;
        continue;
      }
      auto key = std::make_pair(pc.upper, pc.lower);
      if (!symps.count(key)) symps[key] = {pc.kind, symp_of_pair(G, pc).size()};
    }
  Json j;
  j["geometry"] = to_json(G.tags());
  j["pairs_at_distance_two"] = pairs;
  j["special_pairs"] = special;
  Json list = Json::array();
  std::map<std::string, std::size_t> by_kind;
  for (const auto& [key, v] : symps) {
    ++by_kind[to_string(v.first)];
    list.push_back({{"kind", to_string(v.first)}, {"upper", to_json(key.first)}, {"lower", to_json(key.second)},
                    {"points", v.second}});
  }
  j["counts"] = by_kind;
  j["symps"] = list;
  write_text(o.out, dump(j), out);
  if (!o.out.empty()) {
    out << geometry_title(G.tags()) << ": " << pairs << " pairs at distance 2, " << special << " special, "
        << symps.size() << " symps\n";
  }
  return kExitOk;
}

int cmd_classify(const Options& o, std::ostream& out) {
  Geometry G = build_from(o);
  std::vector<ClassificationReport> reports;
  Json j;
  j["geometry"] = to_json(G.tags());
  if (!o.in.empty()) {
    Json in = read_json(o.in);
    PointSet S;
    if (in.contains("points")) {
      for (const auto& p : in.at("points")) {
        int i = p.get<int>();
        if (i < 0 || static_cast<std::size_t>(i) >= G.num_points()) throw InvalidArgument("point index out of range");
        S.push_back(i);
      }
    } else if (in.contains("subspaces")) {
      for (const auto& s : in.at("subspaces")) {
        auto idx = G.index_of(subspace_from_json(G.field(), G.ambient_dim(), s));
        if (!idx) throw InvalidArgument("subspace is not a point of the geometry");
        S.push_back(*idx);
      }
    } else {
      throw InvalidArgument("input needs a \"points\" or \"subspaces\" array");
    }
    reports.push_back(classify_subspace(G, S));
    j["report"] = to_json(reports.back());
  } else {
    A32Enumeration e = enumerate_A32_subspaces(G, o.budget, o.threads);
    reports = e.reports;
    j["enumeration"] = to_json(e);
  }
  write_text(o.out, o.format == "tsv" ? to_tsv(reports) : dump(j), out);
  if (!o.out.empty()) {
    std::map<std::string, std::size_t> tally;
    for (const auto& r : reports) ++tally[to_string(r.verdict)];
    out << geometry_title(G.tags()) << ":";
    for (const auto& [v, c] : tally) out << " " << v << "=" << c;
    out << "\n";
  }
  return kExitOk;
}

void print_result(const CheckResult& r, bool verbose, std::ostream& out) {
  out << (r.passed ? "PASS" : "FAIL") << "\t" << r.name << "\t" << r.detail << "\t" << std::fixed
      << std::setprecision(2) << r.seconds << " s\n";
  out.unsetf(std::ios::fixed);
  if (verbose || !r.passed)
    for (const auto& row : r.rows) out << "\t" << row << "\n";
}

Json result_json(const CheckResult& r) {
  return {{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}, {"rows", r.rows}};
}

int cmd_verify(const Options& o, std::ostream& out) {
  if (o.list) {
    for (const auto& l : lemma_catalog()) out << l.name << "\t" << l.summary << "\n";
    for (const auto& c : acceptance_criteria()) out << "criterion-" << c.id << "\t" << c.title << "\n";
    return kExitOk;
  }
  std::vector<CheckResult> results;
  const std::string data = o.golden.empty() ? default_data_dir() : o.golden;
  if (o.criterion > 0) {
    results.push_back(run_criterion(o.criterion, o.threads, data));
    print_result(results.back(), o.verbose, out);
  } else if (o.all && o.desk) {
    for (const auto& c : acceptance_criteria()) {
      results.push_back(run_criterion(c.id, o.threads, data));
      print_result(results.back(), o.verbose, out);
    }
  } else {
    std::vector<std::string> names;
    if (o.all) {
      for (const auto& l : lemma_catalog()) names.push_back(l.name);
    } else if (!o.lemma.empty()) {
      names.push_back(o.lemma);
    } else {
      throw UsageError("verify needs --lemma NAME, --criterion N, --all or --list");
    }
    LemmaParams p;
    p.type = o.all ? "" : o.type;
    p.n = o.n;
    p.k = o.k;
    p.q = o.q;
    p.threads = o.threads;
    p.budget = o.budget;
    if (!o.golden.empty()) p.golden = o.golden + "/d53_distance_diagram.json";
    if (!p.type.empty() && (p.n <= 0 || p.q <= 0)) throw UsageError("--type needs --n and --q (and --k)");
    // A dual polar space is the Grassmannian with k = n.
    if (!p.type.empty() && p.k <= 0) p.k = p.n;
    for (const auto& name : names) {
      results.push_back(verify_lemma(name, p));
      print_result(results.back(), o.verbose, out);
    }
  }
  bool ok = true;
  Json j = Json::array();
  for (const auto& r : results) {
    ok = ok && r.passed;
    j.push_back(result_json(r));
  }
  if (!o.out.empty()) write_text(o.out, dump(j), out);
  return ok ? kExitOk : kExitVerificationFailed;
}

int cmd_export(const Options& o, std::ostream& out) {
  if (o.in.empty()) throw UsageError("export needs --in geometry.json");
  Geometry G = geometry_from_json(read_json(o.in));
  std::string text;
  if (o.format == "dot")
    text = to_dot(G);
  else if (o.format == "json")
    text = dump(to_json(G));
  else
    throw UsageError("export formats: json, dot");
  write_text(o.out, text, out);
  return kExitOk;
}

void add_geometry(CLI::App* c, Options& o) {
  c->add_option("--type", o.type, "A | B | C | D | 2D | 2A-even | 2A-odd | D-nminus2");
  c->add_option("--n", o.n, "Witt index n (type A: m)");
  c->add_option("--k", o.k, "point dimension k (type A: j)");
  c->add_option("--q", o.q, "field order");
  c->add_option("--threads", o.threads, "worker threads (0: hardware)")->check(CLI::NonNegativeNumber);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"polargrass: Grassmannians of polar spaces over finite fields"};
  app.require_subcommand(1, 1);
  auto* build = app.add_subcommand("build", "build a geometry and write it as JSON or DOT");
  add_geometry(build, o);
  build->add_option("--out", o.out, "output file (default stdout)");
  build->add_option("--format", o.format)->check(CLI::IsMember({"json", "dot"}));

  auto* dist = app.add_subcommand("distances", "distances from a base point");
  add_geometry(dist, o);
  dist->add_option("--base", o.base, "base point index");
  dist->add_option("--in", o.in, "geometry JSON instead of --type");
  dist->add_option("--out", o.out, "output file");

  auto* apt = app.add_subcommand("apartment", "apartment of the standard frame and its distance diagram");
  add_geometry(apt, o);
  apt->add_option("--out", o.out, "apartment geometry JSON");
  apt->add_option("--diagram", o.diagram, "distance distribution diagram output");
  apt->add_option("--format", o.format, "diagram format")->check(CLI::IsMember({"json", "dot"}));

  auto* sym = app.add_subcommand("symps", "symps and special pairs of a polar Grassmannian");
  add_geometry(sym, o);
  sym->add_option("--out", o.out, "output file");

  auto* cls = app.add_subcommand("classify", "classify A_{3,2} subspaces, or a given point set");
  add_geometry(cls, o);
  cls->add_option("--in", o.in, "JSON with \"points\" (indices) or \"subspaces\" (bases)");
  cls->add_option("--out", o.out, "output file");
  cls->add_option("--budget", o.budget, "exceptional candidate budget");
  cls->add_option("--format", o.format)->check(CLI::IsMember({"json", "tsv"}));

  auto* ver = app.add_subcommand("verify", "run lemma checks or the acceptance suite");
  add_geometry(ver, o);
  ver->add_option("--lemma", o.lemma, "lemma name (see --list)");
  ver->add_option("--criterion", o.criterion, "acceptance criterion number");
  ver->add_flag("--all", o.all, "every lemma; with --desk the acceptance suite");
  ver->add_flag("--desk", o.desk, "acceptance criteria");
  ver->add_flag("--list", o.list, "list lemma names");
  ver->add_flag("--verbose", o.verbose, "print evidence rows");
  ver->add_option("--budget", o.budget, "exceptional candidate budget");
  ver->add_option("--golden", o.golden, "directory with reference files");
  ver->add_option("--out", o.out, "results JSON");

  auto* exp = app.add_subcommand("export", "convert a geometry JSON file");
  exp->add_option("--in", o.in, "geometry JSON")->required();
  exp->add_option("--out", o.out, "output file");
  exp->add_option("--format", o.format)->check(CLI::IsMember({"json", "dot"}));

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (build->parsed()) return cmd_build(o, out);
    if (dist->parsed()) return cmd_distances(o, out);
    if (apt->parsed()) return cmd_apartment(o, out);
    if (sym->parsed()) return cmd_symps(o, out);
    if (cls->parsed()) return cmd_classify(o, out);
    if (ver->parsed()) return cmd_verify(o, out);
    if (exp->parsed()) return cmd_export(o, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Json::exception& e) {
    err << "error: malformed input: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

int run(int argc, char** argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, std::cout, std::cerr);
}

}  // namespace polargrass
