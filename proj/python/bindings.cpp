#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "polargrass/classify.hpp"
#include "polargrass/cli.hpp"
#include "polargrass/error.hpp"
#include "polargrass/lemmas.hpp"
#include "polargrass/polargeom.hpp"
#include "polargrass/serialize.hpp"

namespace py = pybind11;
using namespace polargrass;

namespace {

std::vector<std::vector<int>> basis_of(const Subspace& S) {
  std::vector<std::vector<int>> out;
  for (const auto& row : S.basis()) out.emplace_back(row.begin(), row.end());
  return out;
}

std::string check_json(const CheckResult& r) {
  return Json{{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}, {"rows", r.rows}, {"seconds", r.seconds}}
      .dump();
}

}  // namespace

PYBIND11_MODULE(_polargrass, m) {
  m.doc() = "polar Grassmannians over finite fields";

  py::register_exception<Error>(m, "Error");
  py::register_exception<InvalidArgument>(m, "InvalidArgument", PyExc_ValueError);
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded");
  py::register_exception<Unsupported>(m, "Unsupported");

  m.def("gaussian_binomial", &gaussian_binomial, py::arg("n"), py::arg("k"), py::arg("q"));

  py::class_<Geometry>(m, "Geometry")
      .def_property_readonly("num_points", &Geometry::num_points)
      .def_property_readonly("num_lines", &Geometry::num_lines)
      .def_property_readonly("ambient_dim", &Geometry::ambient_dim)
      .def_property_readonly("point_dim", &Geometry::point_dim)
      .def_property_readonly("type", [](const Geometry& G) { return G.tags().type; })
      .def("point", [](const Geometry& G, int i) { return basis_of(G.point(i)); }, py::arg("index"))
      .def("line", [](const Geometry& G, int l) { auto s = G.line(l); return std::vector<int>(s.begin(), s.end()); },
           py::arg("index"))
      .def("lines_through",
           [](const Geometry& G, int p) { auto s = G.lines_through(p); return std::vector<int>(s.begin(), s.end()); },
           py::arg("point"))
      .def("index_of",
           [](const Geometry& G, const std::vector<std::vector<int>>& rows) -> std::optional<int> {
             std::vector<Vector> vs;
             for (const auto& r : rows) vs.emplace_back(r.begin(), r.end());
             return G.index_of(canonicalize(G.field(), G.ambient_dim(), vs));
           },
           py::arg("rows"))
      .def("to_json", [](const Geometry& G) { return to_json(G).dump(); });

  m.def("build_geometry", &build_geometry, py::arg("type"), py::arg("n"), py::arg("k"), py::arg("q"),
        py::arg("budget") = kDefaultPointBudget, py::call_guard<py::gil_scoped_release>());
  m.def("oriflamme_apartment", &oriflamme_apartment, py::arg("n"), py::arg("q"));
  m.def("distances_from",
        [](const Geometry& G, int x) {
          auto d = distances_from(G, x);
          return std::vector<int>(d.begin(), d.end());
        },
        py::arg("geometry"), py::arg("base"));
  m.def("distance_distribution",
        [](const Geometry& G, int base, bool refine) {
          auto [rep, dia] = distance_distribution(G, base, refine);
          return to_json(rep, dia).dump();
        },
        py::arg("geometry"), py::arg("base"), py::arg("refine") = true);
  m.def("classify_pair", [](const Geometry& G, int x, int y) { return to_json(classify_pair(G, x, y)).dump(); },
        py::arg("geometry"), py::arg("x"), py::arg("y"));
  m.def("classify_subspace",
        [](const Geometry& G, const std::vector<int>& S) { return to_json(classify_subspace(G, sorted_set(S))).dump(); },
        py::arg("geometry"), py::arg("points"));
  m.def("lemma_names", [] {
    std::vector<std::string> out;
    for (const auto& l : lemma_catalog()) out.push_back(l.name);
    return out;
  });
  m.def("verify_lemma",
        [](const std::string& name, const std::string& type, int n, int k, int q) {
          LemmaParams p;
          p.type = type;
          p.n = n;
          p.k = k;
          p.q = q;
          return check_json(verify_lemma(name, p));
        },
        py::arg("name"), py::arg("type") = "", py::arg("n") = 0, py::arg("k") = 0, py::arg("q") = 0,
        py::call_guard<py::gil_scoped_release>());
  m.def("engine_oracle_counts", [] { return engine_oracle_counts().dump(); });
  m.def("run_cli",
        [](const std::vector<std::string>& args) {
          std::ostringstream out, err;
          int code = run(args, out, err);
          return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"));
}
