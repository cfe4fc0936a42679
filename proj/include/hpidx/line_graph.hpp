#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "hpidx/graph.hpp"

namespace hpidx {

/// Size limits for iterated line graphs.
struct IterationBudget {
  std::size_t max_vertices = 4096;
  std::size_t max_edges = 65536;
};

/// L(G) together with the input edge each new vertex stands for.
struct LineGraphResult {
  Graph graph;
  std::vector<Edge> provenance;  // provenance[v] is an edge of the input graph
};

/// (|V(L)|, |E(L)|) = (|E(G)|, sum over v of C(deg v, 2)), without building L.
std::pair<std::size_t, std::size_t> predict_line_size(const Graph& g);

/// Names longer than this fall back to opaque sequential names ("e0", "e1", ...).
inline constexpr std::size_t kMaxLineVertexName = 64;

/// Throws Error(EmptyLineGraph) on an edgeless graph. The vertex for edge
/// {u,v} is named "<u>.<v>" with the endpoint names sorted, unless some name
/// would collide or exceed kMaxLineVertexName.
LineGraphResult line_graph(const Graph& g);

/// L^n(g). Every stage is checked against the budget before it is built;
/// a violation throws BudgetExceeded with the stage and predicted size.
/// Iterating an edgeless intermediate throws Error(EdgeStarvation).
Graph iterate(const Graph& g, std::size_t n, const IterationBudget& budget = {});

/// As iterate, but keeps every stage with its provenance (stage i holds L^{i+1}).
std::vector<LineGraphResult> iterate_with_provenance(const Graph& g, std::size_t n,
                                                     const IterationBudget& budget = {});

}  // namespace hpidx
