#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hpidx/branches.hpp"
#include "hpidx/campaigns.hpp"
#include "hpidx/canonical.hpp"
#include "hpidx/errors.hpp"
#include "hpidx/generators.hpp"
#include "hpidx/graph_io.hpp"
#include "hpidx/hp_index.hpp"
#include "hpidx/line_graph.hpp"
#include "hpidx/oracle.hpp"
#include "hpidx/report.hpp"

namespace py = pybind11;
using namespace hpidx;

namespace {

// JSON crosses the boundary as text; the json module turns it into dicts.
py::object to_py(const nlohmann::json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

nlohmann::json from_py(const py::object& o) {
  return nlohmann::json::parse(py::module_::import("json").attr("dumps")(o).cast<std::string>());
}

std::vector<std::pair<std::string, std::string>> named_edges(const Graph& g) {
  std::vector<std::pair<std::string, std::string>> out;
  for (const Edge& e : g.edges()) out.emplace_back(g.name(e.u), g.name(e.v));
  return out;
}

py::object report(const CampaignReport& r) { return to_py(r.to_json()); }

CampaignOptions options(std::optional<SearchBudget> budget, std::size_t jobs) {
  CampaignOptions o;
  if (budget) o.budget = *budget;
  o.jobs = jobs;
  return o;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Hamiltonian path index of graphs under iterated line graphs";
  m.attr("__version__") = version();

  static py::exception<Error> base(m, "HpidxError", PyExc_RuntimeError);
  static py::exception<Error> capped(m, "CapExceeded", base.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      if (e.is_cap()) {
        py::set_error(capped, e.what());
      } else {
        py::set_error(base, (std::string(to_string(e.kind())) + ": " + e.what()).c_str());
      }
    }
  });

  py::class_<Graph>(m, "Graph")
      .def_static("from_edge_list", [](const std::string& s) { return from_edge_list(s); })
      .def_static("from_graph6", [](const std::string& s) { return from_graph6(s); })
      .def_property_readonly("vertex_count", &Graph::vertex_count)
      .def_property_readonly("edge_count", &Graph::edge_count)
      .def_property_readonly("names", &Graph::names)
      .def_property_readonly("edges", &named_edges)
      .def("to_edge_list", [](const Graph& g) { return to_edge_list(g); })
      .def("to_graph6", [](const Graph& g) { return to_graph6(g); })
      .def("to_dot", [](const Graph& g) { return to_dot(g); })
      .def("__repr__", [](const Graph& g) {
        return "<Graph " + std::to_string(g.vertex_count()) + " vertices, " + std::to_string(g.edge_count()) +
               " edges>";
      });

  py::class_<SearchBudget>(m, "SearchBudget")
      .def(py::init<>())
      .def_readwrite("dp_vertex_cap", &SearchBudget::dp_vertex_cap)
      .def_readwrite("backtrack_vertex_cap", &SearchBudget::backtrack_vertex_cap)
      .def_property(
          "time_limit_ms", [](const SearchBudget& b) { return b.time_limit.count(); },
          [](SearchBudget& b, long long ms) { b.time_limit = std::chrono::milliseconds(ms); })
      .def_readwrite("node_limit", &SearchBudget::node_limit)
      .def_readwrite("heuristic", &SearchBudget::heuristic)
      .def_property(
          "max_vertices", [](const SearchBudget& b) { return b.iteration_budget.max_vertices; },
          [](SearchBudget& b, std::size_t v) { b.iteration_budget.max_vertices = v; })
      .def_property(
          "max_edges", [](const SearchBudget& b) { return b.iteration_budget.max_edges; },
          [](SearchBudget& b, std::size_t v) { b.iteration_budget.max_edges = v; })
      .def("to_dict", [](const SearchBudget& b) { return to_py(budget_json(b)); });

  m.def("parse", [](const std::string& text, const std::string& format) {
    if (format != "edgelist" && format != "graph6") throw Error(ErrorKind::Validation, "unknown format " + format);
    return parse_graph(text, format == "graph6" ? GraphFormat::Graph6 : GraphFormat::EdgeList);
  }, py::arg("text"), py::arg("format") = "edgelist");

  m.def("line_graph", [](const Graph& g) { return line_graph(g).graph; });
  m.def("iterate", [](const Graph& g, std::size_t n, std::size_t max_vertices, std::size_t max_edges) {
    return iterate(g, n, IterationBudget{max_vertices, max_edges});
  }, py::arg("g"), py::arg("n"), py::arg("max_vertices") = IterationBudget{}.max_vertices,
        py::arg("max_edges") = IterationBudget{}.max_edges);
  m.def("predict_line_size", &predict_line_size);
  m.def("canonical_key", [](const Graph& g) { return key_to_hex(canonical_key(g)); });

  m.def("is_tree", &is_tree);
  m.def("is_block_chain", &is_block_chain);
  m.def("is_caterpillar", &is_caterpillar);
  m.def("blocks", [](const Graph& g) { return to_py(blocks_json(g, blocks_and_cuts(g))); });
  m.def("branches", [](const Graph& g) {
    py::list out;
    for (const Branch& b : branches(g)) out.append(to_py(branch_json(g, b)));
    return out;
  });

  m.def("hp_tree", [](const Graph& t) { return to_py(formula_json(t, hp_tree(t))); });
  m.def("hp_conjecture", [](const Graph& g, const SearchBudget& b) {
    return to_py(formula_json(g, hp_blockchain_conjecture(g, b)));
  }, py::arg("g"), py::arg("budget") = SearchBudget{});
  m.def("hp_oracle", [](const Graph& g, const SearchBudget& b) { return to_py(index_json(hp_oracle(g, b))); },
        py::arg("g"), py::arg("budget") = SearchBudget{});
  m.def("h_oracle", [](const Graph& g, const SearchBudget& b) { return to_py(index_json(h_oracle(g, b))); },
        py::arg("g"), py::arg("budget") = SearchBudget{});
  m.def("compare", [](const Graph& g, const SearchBudget& b, const std::string& tag) {
    return to_py(record_json(compare_formula_oracle(g, b, tag)));
  }, py::arg("g"), py::arg("budget") = SearchBudget{}, py::arg("tag") = "");

  m.def("has_hamiltonian_path", [](const Graph& g, const SearchBudget& b) {
    const auto r = has_hamiltonian_path(g, b);
    std::vector<std::string> names;
    for (Vertex v : r.witness) names.push_back(g.name(v));
    return py::make_tuple(r.found, names);
  }, py::arg("g"), py::arg("budget") = SearchBudget{});
  m.def("has_hamiltonian_cycle", [](const Graph& g, const SearchBudget& b) {
    const auto r = has_hamiltonian_cycle(g, b);
    std::vector<std::string> names;
    for (Vertex v : r.witness) names.push_back(g.name(v));
    return py::make_tuple(r.found, names);
  }, py::arg("g"), py::arg("budget") = SearchBudget{});
  m.def("dominating_trail", [](const Graph& g, bool closed) {
    const auto r = closed ? has_dominating_closed_trail(g) : has_dominating_trail(g);
    std::vector<std::string> names;
    for (Vertex v : r.trail) names.push_back(g.name(v));
    return py::make_tuple(r.found, names);
  }, py::arg("g"), py::arg("closed") = false);

  m.def("path_graph", &path_graph);
  m.def("cycle_graph", &cycle_graph);
  m.def("complete_graph", &complete_graph);
  m.def("star_graph", &star_graph);
  m.def("spider", &spider);
  m.def("double_spider", &double_spider);
  m.def("enumerate_free_trees", &enumerate_free_trees);
  m.def("enumerate_connected_graphs", &enumerate_connected_graphs);
  m.def("random_tree", &random_tree, py::arg("n"), py::arg("seed"));

  m.def("verify_trees", [](std::size_t max_n, std::optional<SearchBudget> b, std::size_t jobs) {
    return report(verify_trees(max_n, options(b, jobs)));
  }, py::arg("max_n"), py::arg("budget") = py::none(), py::arg("jobs") = 1);
  m.def("verify_xiongzong", [](std::size_t max_n, std::optional<SearchBudget> b, std::size_t jobs) {
    return report(verify_xiongzong(max_n, options(b, jobs)));
  }, py::arg("max_n"), py::arg("budget") = py::none(), py::arg("jobs") = 1);
  m.def("verify_hnw", [](std::size_t max_n, std::optional<SearchBudget> b, std::size_t jobs) {
    return report(verify_hnw(max_n, options(b, jobs)));
  }, py::arg("max_n"), py::arg("budget") = py::none(), py::arg("jobs") = 1);
  m.def("explore_conclusion",
        [](std::size_t max_v, std::vector<std::size_t> cycles, std::vector<std::size_t> cliques, bool include_trees,
           bool trees_only, std::uint64_t seed, std::optional<std::size_t> sample, std::optional<SearchBudget> b,
           std::size_t jobs) {
          ExploreParams p;
          p.family = {max_v, std::move(cycles), std::move(cliques), include_trees, trees_only};
          p.seed = seed;
          p.sample = sample;
          return report(explore_conclusion(p, options(b, jobs)));
        },
        py::arg("max_v"), py::arg("cycles") = std::vector<std::size_t>{3}, py::arg("cliques") = std::vector<std::size_t>{},
        py::arg("include_trees") = true, py::arg("trees_only") = false, py::arg("seed") = 0,
        py::arg("sample") = py::none(), py::arg("budget") = py::none(), py::arg("jobs") = 1);
  m.def("reverify_witness", [](const py::object& w, std::optional<SearchBudget> b) {
    return reverify_witness(from_py(w), b ? *b : CampaignOptions::deterministic_budget());
  }, py::arg("witness"), py::arg("budget") = py::none());
}
