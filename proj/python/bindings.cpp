#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "atheory/cli.hpp"
#include "atheory/cubical.hpp"
#include "atheory/fundamental.hpp"
#include "atheory/io.hpp"
#include "atheory/loopspace.hpp"
#include "atheory/simplicial.hpp"

namespace py = pybind11;
using namespace atheory;

namespace {

LoopWalk to_walk(const Graph& g, const std::vector<std::string>& names) {
  LoopWalk w;
  for (const auto& n : names) w.vertices.push_back(g.index_of(n));
  return w;
}

}  // namespace

PYBIND11_MODULE(_atheory, m) {
  m.doc() = "Discrete homotopy invariants of graphs";

  py::register_exception<Error>(m, "AtheoryError", PyExc_ValueError);

  py::class_<Graph>(m, "Graph")
      .def(py::init([](std::vector<std::string> vertices, std::vector<std::pair<std::string, std::string>> edges,
                       std::optional<std::string> base) { return Graph::from_names(vertices, edges, base); }),
           py::arg("vertices"), py::arg("edges"), py::arg("base") = std::nullopt)
      .def_property_readonly("order", &Graph::order)
      .def_property_readonly("size", &Graph::size)
      .def_property_readonly("names", &Graph::names)
      .def_property_readonly("base",
                             [](const Graph& g) -> std::optional<std::string> {
                               if (auto b = g.base()) return g.name(*b);
                               return std::nullopt;
                             })
      .def("edges",
           [](const Graph& g) {
             std::vector<std::pair<std::string, std::string>> out;
             for (const auto& e : g.edges()) out.emplace_back(g.name(e.u), g.name(e.v));
             return out;
           })
      .def("adjacent", [](const Graph& g, const std::string& a, const std::string& b) {
        return g.adjacent(g.index_of(a), g.index_of(b));
      })
      .def("to_json", &format_graph)
      .def_static("from_json", &parse_graph)
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "<Graph order=" + std::to_string(g.order()) + " size=" + std::to_string(g.size()) + ">";
      });

  m.def("cycle_graph", [](int n) { return cycle_graph(n); });
  m.def("complete_graph", [](int n) { return complete_graph(n); });
  m.def("path_graph", [](int n) { return path_graph(n); });
  m.def("cartesian_product", &cartesian_product);

  m.def(
      "gamma_q",
      [](const std::string& facets, int q, const std::string& mode, std::optional<std::vector<std::string>> sigma0) {
        if (mode != "maximal" && mode != "all") throw Error("mode must be maximal or all");
        return gamma_q(parse_facets(facets), q, mode == "all" ? GammaMode::all : GammaMode::maximal, sigma0);
      },
      py::arg("facets"), py::arg("q"), py::arg("mode") = "maximal", py::arg("sigma0") = std::nullopt);

  m.def("a1_presentation", [](const Graph& g) { return format_presentation(a1_presentation(g)); });
  m.def("a1_simplified", [](const Graph& g) { return format_presentation(tietze_simplify(a1_presentation(g))); });
  m.def("abelianization", [](const Graph& g) {
    auto inv = abelianization(a1_presentation(g));
    return py::make_tuple(inv.free_rank, inv.torsion);
  });
  m.def("loops_equivalent", [](const Graph& g, const std::vector<std::string>& a, const std::vector<std::string>& b) {
    return to_string(loops_equivalent(to_walk(g, a), to_walk(g, b), g));
  });
  m.def(
      "homotopy_search",
      [](const Graph& g, const std::vector<std::string>& a, const std::vector<std::string>& b, int width,
         int max_layers) -> std::optional<int> {
        auto fa = GridMap::from_walk(g, to_walk(g, a).vertices, g.require_base());
        auto fb = GridMap::from_walk(g, to_walk(g, b).vertices, g.require_base());
        auto cert = bounded_homotopy_search(fa, fb, {width}, max_layers);
        if (!cert) return std::nullopt;
        return static_cast<int>(cert->layers.size()) - 1;
      },
      py::arg("graph"), py::arg("a"), py::arg("b"), py::arg("width"), py::arg("max_layers"));

  m.def("f_vector", &f_vector, py::arg("graph"), py::arg("max_dim"));

  m.def(
      "loop_graph",
      [](const Graph& g, int max_length, bool collapse) { return build_loop_graph(g, std::nullopt, max_length, collapse).graph; },
      py::arg("graph"), py::arg("max_length"), py::arg("collapse") = true);
  m.def("pointed_components", [](const Graph& g) {
    auto pc = a0(g);
    std::vector<std::vector<std::string>> out;
    for (const auto& c : pc.components) {
      out.emplace_back();
      for (auto v : c) out.back().push_back(g.name(v));
    }
    return py::make_tuple(out, pc.base_component);
  });

  m.def("run_cli", [](const std::vector<std::string>& args) {
    auto r = cli::run(args);
    return py::make_tuple(r.exit_code(), r.report, r.diagnostics);
  });
}
