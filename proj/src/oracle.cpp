#include "hpidx/oracle.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <unordered_set>

#include "hpidx/errors.hpp"
#include "hpidx/search.hpp"

namespace hpidx {
namespace {

using search::SmallGraph;

std::uint64_t vbit(std::size_t v) { return std::uint64_t{1} << v; }

// Solves one block: a hamiltonian path of `block` from a vertex in `starts`
// to a vertex in `ends` (local bitmasks). Returns local indices.
std::optional<std::vector<int>> solve_block(const Graph& block, std::uint64_t starts, std::uint64_t ends,
                                            const SearchBudget& budget, const search::Deadline& deadline) {
  const std::size_t n = block.vertex_count();
  const std::size_t dp_cap = std::min(budget.dp_vertex_cap, search::kMaxDpVertices);
  const bool exhaustive = n <= std::max(dp_cap, budget.backtrack_vertex_cap);
  if (n > 64 || (!exhaustive && !budget.heuristic)) {
    throw Error(ErrorKind::Capped, "block with " + std::to_string(n) +
                                       " vertices exceeds the search caps");
  }
  const SmallGraph sg = SmallGraph::from(block);
  if (n <= dp_cap) return search::path_dp(sg, starts, ends);
  // Cheap positive certificates first; the exhaustive search settles the rest.
  if (budget.heuristic) {
    if (auto p = search::path_rotation(sg, starts, ends, 4000 * n)) return p;
  }
  if (!exhaustive) {
    throw Error(ErrorKind::Capped, "block with " + std::to_string(n) +
                                       " vertices exceeds the exhaustive search caps and no path was found");
  }
  return search::path_backtrack(sg, starts, ends, deadline, budget.node_limit);
}

std::uint64_t local_mask(const std::vector<Vertex>& verts, std::optional<Vertex> only) {
  if (!only) return verts.size() == 64 ? ~std::uint64_t{0} : vbit(verts.size()) - 1;
  const auto it = std::lower_bound(verts.begin(), verts.end(), *only);
  return vbit(static_cast<std::size_t>(it - verts.begin()));
}

std::vector<std::string> names_of(const Graph& g, const std::vector<Vertex>& vs) {
  std::vector<std::string> out;
  out.reserve(vs.size());
  for (Vertex v : vs) out.push_back(g.name(v));
  return out;
}

}  // namespace

const char* to_string(Verdict v, bool traceability) {
  switch (v) {
    case Verdict::Positive: return traceability ? "traceable" : "hamiltonian";
    case Verdict::Negative: return traceability ? "not-traceable" : "not-hamiltonian";
    case Verdict::Capped: return "capped";
  }
  return "capped";
}

HamiltonianResult has_hamiltonian_path(const Graph& g, const SearchBudget& budget) {
  HamiltonianResult result;
  const std::size_t n = g.vertex_count();
  if (n == 0) return result;
  if (n == 1) return {true, {0}};
  if (!is_connected(g)) return result;

  // A traceable graph has a path as its block-cutvertex graph: every end
  // block holds an endpoint of the path. Along the chain the path crosses
  // each cut vertex once, so it splits into hamiltonian paths of the blocks
  // joining consecutive cut vertices.
  const BlockDecomposition bd = blocks_and_cuts(g);
  if (!bd.is_block_chain) return result;
  const search::Deadline deadline(budget.time_limit);

  if (bd.blocks.size() == 1) {
    const auto path = solve_block(g, ~std::uint64_t{0}, ~std::uint64_t{0}, budget, deadline);
    if (!path) return result;
    result.found = true;
    for (int v : *path) result.witness.push_back(static_cast<Vertex>(v));
    return result;
  }

  const auto ends = bd.end_blocks();
  std::size_t block = ends.front();
  std::optional<Vertex> entry;
  std::vector<char> used(bd.blocks.size(), 0);
  while (true) {
    used[block] = 1;
    const auto& verts = bd.block_vertices[block];
    std::optional<Vertex> exit;
    for (Vertex v : verts) {
      if (bd.is_cut_vertex(v) && (!entry || v != *entry)) exit = v;
    }
    const Graph sub = induced_subgraph(g, verts);
    const auto path = solve_block(sub, local_mask(verts, entry), local_mask(verts, exit), budget, deadline);
    if (!path) return {};
    for (std::size_t i = (entry ? 1 : 0); i < path->size(); ++i) {
      result.witness.push_back(verts[static_cast<std::size_t>((*path)[i])]);
    }
    if (!exit) break;
    std::size_t next = bd.blocks.size();
    for (std::size_t b = 0; b < bd.blocks.size(); ++b) {
      if (!used[b] && std::binary_search(bd.block_vertices[b].begin(), bd.block_vertices[b].end(), *exit)) {
        next = b;
      }
    }
    entry = exit;
    block = next;
  }
  result.found = true;
  return result;
}

HamiltonianResult has_hamiltonian_cycle(const Graph& g, const SearchBudget& budget) {
  HamiltonianResult result;
  const std::size_t n = g.vertex_count();
  if (n < 3 || !is_connected(g)) return result;
  // A hamiltonian graph is 2-connected.
  if (blocks_and_cuts(g).blocks.size() != 1) return result;
  const search::Deadline deadline(budget.time_limit);
  Vertex start = 0;
  for (Vertex v = 1; v < n; ++v) {
    if (g.degree(v) < g.degree(start)) start = v;
  }
  std::uint64_t ends = 0;
  for (Vertex w : g.neighbors(start)) ends |= vbit(w);
  const auto path = solve_block(g, vbit(start), ends, budget, deadline);
  if (!path) return result;
  result.found = true;
  for (int v : *path) result.witness.push_back(static_cast<Vertex>(v));
  return result;
}

namespace {

class TrailSearch {
 public:
  TrailSearch(const Graph& g, bool closed) : g_(g), closed_(closed) {
    const auto& edges = g.edges();
    incident_.resize(g.vertex_count());
    for (std::size_t e = 0; e < edges.size(); ++e) {
      incident_[edges[e].u].push_back({edges[e].v, e});
      incident_[edges[e].v].push_back({edges[e].u, e});
    }
  }

  std::optional<std::vector<Vertex>> run() {
    for (Vertex s = 0; s < g_.vertex_count(); ++s) {
      if (incident_[s].empty()) continue;
      start_ = s;
      if (closed_) visited_.clear();
      trail_.assign(1, s);
      if (dfs(s, 0, vbit(s))) return trail_;
    }
    return std::nullopt;
  }

 private:
  struct Incidence {
    Vertex to;
    std::size_t edge;
  };

  bool dominated(std::uint64_t covered) const {
    for (const Edge& e : g_.edges()) {
      if (!((covered >> e.u) & 1) && !((covered >> e.v) & 1)) return false;
    }
    return true;
  }

  bool dfs(Vertex v, std::uint32_t used, std::uint64_t covered) {
    if (used != 0 && (!closed_ || v == start_) && dominated(covered)) return true;
    const std::uint64_t key = (std::uint64_t{used} << 6) | v;
    if (!visited_.insert(key).second) return false;
    for (const auto& [w, e] : incident_[v]) {
      if ((used >> e) & 1) continue;
      trail_.push_back(w);
      if (dfs(w, used | (1u << e), covered | vbit(w))) return true;
      trail_.pop_back();
    }
    return false;
  }

  const Graph& g_;
  bool closed_;
  std::vector<std::vector<Incidence>> incident_;
  // For open trails the covered set is determined by the used edges, so
  // states are shared across start vertices.
  std::unordered_set<std::uint64_t> visited_;
  std::vector<Vertex> trail_;
  Vertex start_ = 0;
};

TrailResult dominating_trail(const Graph& g, bool closed) {
  if (!is_connected(g)) throw Error(ErrorKind::NotConnected, "graph is not connected");
  if (g.edge_count() > kMaxTrailEdges) {
    throw Error(ErrorKind::Capped, "dominating-trail search is exact only up to " +
                                       std::to_string(kMaxTrailEdges) + " edges");
  }
  if (closed) {
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      if (g.degree(v) == g.edge_count()) return {true, {v}};
    }
  }
  if (g.edge_count() == 0) return {};
  TrailSearch search(g, closed);
  if (auto t = search.run()) return {true, std::move(*t)};
  return {};
}

}  // namespace

TrailResult has_dominating_trail(const Graph& g, const SearchBudget&) { return dominating_trail(g, false); }

TrailResult has_dominating_closed_trail(const Graph& g, const SearchBudget&) {
  return dominating_trail(g, true);
}

bool is_hamiltonian_path(const Graph& g, std::span<const Vertex> path) {
  if (path.size() != g.vertex_count() || path.empty()) return false;
  std::vector<char> seen(g.vertex_count(), 0);
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (path[i] >= g.vertex_count() || seen[path[i]]) return false;
    seen[path[i]] = 1;
    if (i > 0 && !g.has_edge(path[i - 1], path[i])) return false;
  }
  return true;
}

bool is_hamiltonian_cycle(const Graph& g, std::span<const Vertex> cycle) {
  return cycle.size() >= 3 && is_hamiltonian_path(g, cycle) && g.has_edge(cycle.front(), cycle.back());
}

bool is_trail(const Graph& g, std::span<const Vertex> walk) {
  std::unordered_set<std::size_t> used;
  for (std::size_t i = 0; i + 1 < walk.size(); ++i) {
    const auto e = walk[i] < g.vertex_count() && walk[i + 1] < g.vertex_count()
                       ? g.edge_index(walk[i], walk[i + 1])
                       : std::nullopt;
    if (!e || !used.insert(*e).second) return false;
  }
  return !walk.empty();
}

bool dominates_edges(const Graph& g, std::span<const Vertex> vertices) {
  std::vector<char> on(g.vertex_count(), 0);
  for (Vertex v : vertices) on[v] = 1;
  return std::all_of(g.edges().begin(), g.edges().end(), [&](const Edge& e) { return on[e.u] || on[e.v]; });
}

namespace {

constexpr std::size_t kMaxStages = 64;

IndexResult index_oracle(const Graph& g, const SearchBudget& budget, bool traceability) {
  IndexResult result;
  result.traceability = traceability;
  Graph current = g;
  for (std::size_t n = 0; n < kMaxStages; ++n) {
    StageRecord stage{n, current.vertex_count(), current.edge_count(), Verdict::Capped};
    HamiltonianResult found;
    try {
      found = traceability ? has_hamiltonian_path(current, budget) : has_hamiltonian_cycle(current, budget);
    } catch (const Error& e) {
      if (!e.is_cap()) throw;
      result.stages.push_back(stage);
      result.capped_reason = "stage " + std::to_string(n) + ": " + e.what();
      return result;
    }
    stage.verdict = found.found ? Verdict::Positive : Verdict::Negative;
    result.stages.push_back(stage);
    if (traceability && n == 1 && g.edge_count() <= kMaxTrailEdges) {
      result.dominating_trail_check = has_dominating_trail(g).found;
    }
    if (found.found) {
      result.value = n;
      if (current.vertex_count() <= budget.dp_vertex_cap) result.witness = names_of(current, found.witness);
      return result;
    }
    const auto [v, e] = predict_line_size(current);
    if (current.edge_count() == 0) {
      result.capped_reason = "stage " + std::to_string(n) + " is edgeless";
      return result;
    }
    if (v > budget.iteration_budget.max_vertices || e > budget.iteration_budget.max_edges) {
      result.capped_reason = BudgetExceeded(n + 1, v, e).what();
      return result;
    }
    current = line_graph(current).graph;
  }
  result.capped_reason = "stage limit reached";
  return result;
}

}  // namespace

IndexResult hp_oracle(const Graph& g, const SearchBudget& budget) {
  if (!is_connected(g)) throw Error(ErrorKind::NotConnected, "graph is not connected");
  return index_oracle(g, budget, true);
}

IndexResult h_oracle(const Graph& g, const SearchBudget& budget) {
  if (!is_connected(g)) throw Error(ErrorKind::NotConnected, "graph is not connected");
  if (is_path(g)) {
    throw Error(ErrorKind::Precondition, "hamiltonian index is undefined for paths");
  }
  return index_oracle(g, budget, false);
}

}  // namespace hpidx
