#include "hpidx/line_graph.hpp"

#include <unordered_set>

#include "hpidx/errors.hpp"

namespace hpidx {

std::pair<std::size_t, std::size_t> predict_line_size(const Graph& g) {
  std::size_t edges = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const std::size_t d = g.degree(v);
    edges += d * (d - (d > 0 ? 1 : 0)) / 2;
  }
  return {g.edge_count(), edges};
}

LineGraphResult line_graph(const Graph& g) {
  if (g.edge_count() == 0) {
    throw Error(ErrorKind::EmptyLineGraph, "line graph of an edgeless graph is empty");
  }
  const auto& edges = g.edges();
  std::vector<std::string> names;
  names.reserve(edges.size());
  std::unordered_set<std::string> seen;
  bool opaque = false;
  for (const Edge& e : edges) {
    const std::string& a = g.name(e.u);
    const std::string& b = g.name(e.v);
    std::string name = a < b ? a + "." + b : b + "." + a;
    if (name.size() > kMaxLineVertexName || !seen.insert(name).second) {
      opaque = true;
      break;
    }
    names.push_back(std::move(name));
  }
  if (opaque) {
    names.clear();
    for (std::size_t i = 0; i < edges.size(); ++i) names.push_back("e" + std::to_string(i));
  }

  // Edges of L: all pairs of edges incident to a common vertex. In a simple
  // graph two distinct edges share at most one endpoint, so no duplicates.
  std::vector<std::vector<Vertex>> incident(g.vertex_count());
  for (Vertex i = 0; i < edges.size(); ++i) {
    incident[edges[i].u].push_back(i);
    incident[edges[i].v].push_back(i);
  }
  std::vector<Edge> line_edges;
  line_edges.reserve(predict_line_size(g).second);
  for (const auto& list : incident) {
    for (std::size_t i = 0; i < list.size(); ++i) {
      for (std::size_t j = i + 1; j < list.size(); ++j) line_edges.emplace_back(list[i], list[j]);
    }
  }
  return {Graph::from_edges(std::move(names), std::move(line_edges)), edges};
}

namespace {

void check_stage(const Graph& current, std::size_t stage, const IterationBudget& budget) {
  if (current.edge_count() == 0) {
    throw Error(ErrorKind::EdgeStarvation,
                "stage " + std::to_string(stage - 1) + " is edgeless; L^" +
                    std::to_string(stage) + " is undefined");
  }
  const auto [v, e] = predict_line_size(current);
  if (v > budget.max_vertices || e > budget.max_edges) throw BudgetExceeded(stage, v, e);
}

}  // namespace

Graph iterate(const Graph& g, std::size_t n, const IterationBudget& budget) {
  if (!is_connected(g)) throw Error(ErrorKind::NotConnected, "graph is not connected");
  Graph current = g;
  for (std::size_t stage = 1; stage <= n; ++stage) {
    check_stage(current, stage, budget);
    current = line_graph(current).graph;
  }
  return current;
}

std::vector<LineGraphResult> iterate_with_provenance(const Graph& g, std::size_t n,
                                                     const IterationBudget& budget) {
  if (!is_connected(g)) throw Error(ErrorKind::NotConnected, "graph is not connected");
  std::vector<LineGraphResult> chain;
  chain.reserve(n);
  const Graph* current = &g;
  for (std::size_t stage = 1; stage <= n; ++stage) {
    check_stage(*current, stage, budget);
    chain.push_back(line_graph(*current));
    current = &chain.back().graph;
  }
  return chain;
}

}  // namespace hpidx
