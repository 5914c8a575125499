#include <coldsp/constrained.hpp>
#include <coldsp/errors.hpp>
#include <coldsp/ilp.hpp>
#include <coldsp/io.hpp>
#include <coldsp/oracles.hpp>
#include <coldsp/peeling.hpp>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>

namespace py = pybind11;
using namespace coldsp;

namespace {

ParseOptions options_for(const std::string& sep) {
  ParseOptions options;
  if (sep.size() > 1) throw std::invalid_argument("sep must be a single character");
  if (sep.size() == 1) options.field_separator = sep[0];
  return options;
}

py::dict to_dict(const SubgraphResult& r, const EdgeColoredGraph& g) {
  py::list nodes;
  for (auto v : r.nodes) nodes.append(g.node_label(v));
  py::dict colors;
  for (std::size_t c = 0; c < r.color_counts.size(); ++c) colors[py::str(g.color_label(c))] = r.color_counts[c];
  py::dict out;
  out["nodes"] = nodes;
  out["edges"] = r.edge_count;
  out["density"] = r.density.value();
  out["density_fraction"] = py::make_tuple(r.density.edges, r.density.nodes);
  out["colors"] = colors;
  if (r.simple_density) out["simple_density"] = r.simple_density->value();
  return out;
}

ColorRequirement requirement(const EdgeColoredGraph& g, const py::object& h, const std::string& mode) {
  RequirementMode m = RequirementMode::AtLeast;
  if (mode == "atmost") m = RequirementMode::AtMost;
  else if (mode == "exactly") m = RequirementMode::Exactly;
  else if (mode != "atleast") throw std::invalid_argument("mode must be atleast, atmost or exactly");
  if (py::isinstance<py::str>(h)) return parse_requirement(h.cast<std::string>(), g, m);
  ColorRequirement req;
  req.mode = m;
  if (py::isinstance<py::dict>(h)) {
    req.h.assign(g.num_colors(), 0);
    for (auto [key, value] : h.cast<py::dict>()) {
      const auto c = g.find_color(py::str(key).cast<std::string>());
      if (!c) throw std::invalid_argument("unknown color " + py::str(key).cast<std::string>());
      req.h[*c] = value.cast<std::int64_t>();
    }
    return req;
  }
  req.h = h.cast<std::vector<std::int64_t>>();
  return req;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Densest subgraphs with per-color edge requirements";

  py::register_exception<InfeasibleError>(m, "InfeasibleError");
  py::register_exception<CapExceededError>(m, "CapExceededError");
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  py::class_<EdgeColoredGraph>(m, "Graph")
      .def_static("parse", [](const std::string& text, const std::string& sep) {
            return parse_edge_list(std::string_view(text), options_for(sep));
          }, py::arg("text"), py::arg("sep") = "")
      .def_static("load", [](const std::string& path, const std::string& sep) {
            return load_edge_list(path, options_for(sep));
          }, py::arg("path"), py::arg("sep") = "")
      .def_property_readonly("num_nodes", &EdgeColoredGraph::num_nodes)
      .def_property_readonly("num_edges", &EdgeColoredGraph::num_edges)
      .def_property_readonly("num_colors", &EdgeColoredGraph::num_colors)
      .def_property_readonly("single_colored", &EdgeColoredGraph::single_colored)
      .def("nodes", [](const EdgeColoredGraph& g) {
        std::vector<std::string> out;
        for (NodeIndex v = 0; v < g.num_nodes(); ++v) out.push_back(g.node_label(v));
        return out;
      })
      .def("color_totals", [](const EdgeColoredGraph& g) {
        std::map<std::string, std::int64_t> out;
        const auto totals = g.color_totals();
        for (ColorIndex c = 0; c < g.num_colors(); ++c) out[g.color_label(c)] = totals[c];
        return out;
      })
      .def("to_edge_list", &serialize_edge_list)
      .def("__repr__", [](const EdgeColoredGraph& g) {
        return "<Graph nodes=" + std::to_string(g.num_nodes()) + " edges=" + std::to_string(g.num_edges()) +
               " colors=" + std::to_string(g.num_colors()) + ">";
      });

  m.def("lower_bound_nodes", [](std::int64_t h, std::int64_t p) { return lower_bound_nodes(h, p); },
        py::arg("h"), py::arg("p") = 1);

  m.def("greedy_dsp", [](const EdgeColoredGraph& g, bool multi) {
    return to_dict(multi ? greedy_peel_unconstrained(to_multigraph(g)) : greedy_peel_unconstrained(g), g);
  }, py::arg("graph"), py::arg("multi") = false);
  m.def("exact_dsp", [](const EdgeColoredGraph& g, bool multi) {
    return to_dict(multi ? exact_dsp_flow(to_multigraph(g)) : exact_dsp_flow(g), g);
  }, py::arg("graph"), py::arg("multi") = false);
  m.def("at_least_h_edges", [](const EdgeColoredGraph& g, std::int64_t h) {
    return to_dict(at_least_h_edges_peel(g, h), g);
  }, py::arg("graph"), py::arg("h"));
  m.def("col_approx", [](const EdgeColoredGraph& g, const py::object& h, const std::string& patch) {
    ColApproxOptions options;
    if (patch == "add") options.patch = PatchMode::AddEdges;
    else if (patch != "deficit") throw std::invalid_argument("patch must be deficit or add");
    return to_dict(col_approx(g, requirement(g, h, "atleast"), options), g);
  }, py::arg("graph"), py::arg("h"), py::arg("patch") = "deficit");
  m.def("col_approx_multi", [](const EdgeColoredGraph& g, const py::object& h) {
    return to_dict(col_approx_multi(g, requirement(g, h, "atleast")), g);
  }, py::arg("graph"), py::arg("h"));
  m.def("heuristic", [](const EdgeColoredGraph& g, const py::object& h, bool multi) {
    const auto req = requirement(g, h, "atleast");
    return to_dict(multi ? heuristic_peel(to_multigraph(g), req) : heuristic_peel(g, req), g);
  }, py::arg("graph"), py::arg("h"), py::arg("multi") = false);

  m.def("brute_force_densest", [](const EdgeColoredGraph& g, std::size_t cap) {
    return to_dict(brute_force_densest(g, {cap}), g);
  }, py::arg("graph"), py::arg("cap") = 20);
  m.def("brute_force_at_least_h_edges", [](const EdgeColoredGraph& g, std::int64_t h, std::size_t cap) {
    return to_dict(brute_force_at_least_h_edges(g, h, {cap}), g);
  }, py::arg("graph"), py::arg("h"), py::arg("cap") = 20);
  m.def("brute_force_colored",
        [](const EdgeColoredGraph& g, const py::object& h, const std::string& mode, bool multi, std::size_t cap) {
          const auto req = requirement(g, h, mode);
          return to_dict(multi ? brute_force_colored(to_multigraph(g), req, {cap}) : brute_force_colored(g, req, {cap}),
                         g);
        },
        py::arg("graph"), py::arg("h"), py::arg("mode") = "atleast", py::arg("multi") = false, py::arg("cap") = 20);

  m.def("write_ilp", [](const EdgeColoredGraph& g, const py::object& h, std::int64_t k, const std::string& name) {
    if (py::isinstance<py::int_>(h)) return write_lp(build_ilp(g, h.cast<std::int64_t>(), k, name));
    return write_lp(build_ilp(g, requirement(g, h, "atleast"), k, name));
  }, py::arg("graph"), py::arg("h"), py::arg("k"), py::arg("name") = "model");
}
