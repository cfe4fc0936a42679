#include "hpidx/report.hpp"

#include "hpidx/graph_io.hpp"

namespace hpidx {

using nlohmann::json;

namespace {

json names(const Graph& g, const std::vector<Vertex>& vs) {
  json out = json::array();
  for (Vertex v : vs) out.push_back(g.name(v));
  return out;
}

}  // namespace

json graph_json(const Graph& g) {
  json edges = json::array();
  for (const Edge& e : g.edges()) edges.push_back({g.name(e.u), g.name(e.v)});
  return {{"vertices", g.names()}, {"edges", std::move(edges)}};
}

json branch_json(const Graph& g, const Branch& b) {
  return {{"vertices", names(g, b.vertices)},
          {"edges", b.edge_count()},
          {"cb", b.in_cb},
          {"cb1", b.in_cb1},
          {"k", b.in_cb ? json(k_value(b)) : json(nullptr)}};
}

json formula_json(const Graph& g, const FormulaResult& r) {
  json branches = json::array();
  for (const Branch& b : r.branches) branches.push_back(branch_json(g, b));
  json per_pair = json::array();
  for (const PairValue& pv : r.per_pair) {
    per_pair.push_back({{"pair", json::array({names(g, r.branches[pv.pair.first].vertices),
                                               names(g, r.branches[pv.pair.second].vertices)})},
                        {"value", pv.value ? json(*pv.value) : json(nullptr)}});
  }
  return {
      {"value", r.value},
      {"conjectural", r.conjectural},
      {"endpath", r.chosen_endpath ? names(r.endpath_host, r.chosen_endpath->vertices) : json(nullptr)},
      {"off_path_branch",
       r.off_path_branch ? names(g, r.branches[*r.off_path_branch].vertices) : json(nullptr)},
      {"per_pair", std::move(per_pair)},
      {"pairs_differ_in_coverage", r.pairs_differ_in_coverage},
      {"branches", std::move(branches)},
  };
}

json index_json(const IndexResult& r) {
  json stages = json::array();
  for (const StageRecord& s : r.stages) {
    stages.push_back({{"n", s.n}, {"V", s.vertices}, {"E", s.edges}, {"verdict", to_string(s.verdict, r.traceability)}});
  }
  json out = {{"index", r.traceability ? "hamiltonian_path_index" : "hamiltonian_index"},
              {"value", r.value ? json(*r.value) : json("capped")},
              {"stages", std::move(stages)}};
  if (!r.witness.empty()) out["witness"] = r.witness;
  if (r.capped()) out["capped_reason"] = r.capped_reason;
  if (r.dominating_trail_check) out["dominating_trail_check"] = *r.dominating_trail_check;
  return out;
}

json blocks_json(const Graph& g, const BlockDecomposition& bd) {
  json blocks = json::array();
  for (std::size_t b = 0; b < bd.blocks.size(); ++b) {
    blocks.push_back({{"vertices", names(g, bd.block_vertices[b])},
                      {"edges", bd.blocks[b].size()},
                      {"cut_vertices", bd.cut_count(b)}});
  }
  json bridges = json::array();
  for (std::size_t e : bd.bridges) bridges.push_back({g.name(g.edges()[e].u), g.name(g.edges()[e].v)});
  return {{"blocks", std::move(blocks)},
          {"cut_vertices", names(g, bd.cut_vertices)},
          {"bridges", std::move(bridges)},
          {"is_block_chain", bd.is_block_chain}};
}

json budget_json(const SearchBudget& b) {
  return {{"dp_vertex_cap", b.dp_vertex_cap},
          {"backtrack_vertex_cap", b.backtrack_vertex_cap},
          {"time_limit_ms", b.time_limit.count()},
          {"node_limit", b.node_limit},
          {"heuristic", b.heuristic},
          {"max_vertices", b.iteration_budget.max_vertices},
          {"max_edges", b.iteration_budget.max_edges}};
}

json record_json(const ExplorerRecord& r) {
  return {{"key", r.graph_key},
          {"tag", r.family_tag},
          {"graph6", to_graph6(r.graph)},
          {"edge_list", to_edge_list(r.graph)},
          {"graph", graph_json(r.graph)},
          {"formula_value", r.formula.value},
          {"oracle_value", r.oracle.value ? json(*r.oracle.value) : json("capped")},
          {"verdict", to_string(r.verdict)},
          {"formula", formula_json(r.graph, r.formula)},
          {"oracle", index_json(r.oracle)}};
}

}  // namespace hpidx

namespace hpidx {

const char* version() { return HPIDX_VERSION; }

}  // namespace hpidx
