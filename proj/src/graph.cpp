#include "hpidx/graph.hpp"

#include <algorithm>

#include "hpidx/errors.hpp"

namespace hpidx {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::Parse: return "parse";
    case ErrorKind::Validation: return "validation";
    case ErrorKind::Precondition: return "precondition";
    case ErrorKind::NotConnected: return "not-connected";
    case ErrorKind::EmptyLineGraph: return "empty-line-graph";
    case ErrorKind::EdgeStarvation: return "edge-starvation";
    case ErrorKind::BudgetExceeded: return "budget-exceeded";
    case ErrorKind::Capped: return "capped";
    case ErrorKind::TooLargeForCanonicalization: return "too-large-for-canonicalization";
    case ErrorKind::KUndefined: return "k-undefined";
    case ErrorKind::OutOfFamily: return "out-of-family";
    case ErrorKind::Unreachable: return "unreachable-by-conjecture";
  }
  return "unknown";
}

Graph Graph::from_edges(std::vector<std::string> names, std::vector<Edge> edges) {
  Graph g;
  g.index_.reserve(names.size());
  for (Vertex v = 0; v < names.size(); ++v) {
    if (!g.index_.emplace(names[v], v).second) {
      throw Error(ErrorKind::Validation, "duplicate vertex name '" + names[v] + "'");
    }
  }
  g.names_ = std::move(names);
  const auto n = g.names_.size();
  for (const Edge& e : edges) {
    if (e.u == e.v) {
      throw Error(ErrorKind::Validation, "self-loop at '" +
                                             (e.u < n ? g.names_[e.u] : std::to_string(e.u)) + "'");
    }
    if (e.v >= n) throw Error(ErrorKind::Validation, "edge endpoint out of range");
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  g.edges_ = std::move(edges);
  g.adjacency_.assign(n, {});
  for (const Edge& e : g.edges_) {
    g.adjacency_[e.u].push_back(e.v);
    g.adjacency_[e.v].push_back(e.u);
  }
  for (auto& nbrs : g.adjacency_) std::sort(nbrs.begin(), nbrs.end());
  return g;
}

Graph Graph::from_index_edges(std::size_t n,
                              const std::vector<std::pair<Vertex, Vertex>>& edges) {
  std::vector<std::string> names(n);
  for (std::size_t i = 0; i < n; ++i) names[i] = std::to_string(i);
  std::vector<Edge> es;
  es.reserve(edges.size());
  for (auto [a, b] : edges) {
    if (a == b) throw Error(ErrorKind::Validation, "self-loop at '" + std::to_string(a) + "'");
    es.emplace_back(a, b);
  }
  return from_edges(std::move(names), std::move(es));
}

std::size_t Graph::max_degree() const {
  std::size_t d = 0;
  for (const auto& nbrs : adjacency_) d = std::max(d, nbrs.size());
  return d;
}

std::optional<Vertex> Graph::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool Graph::has_edge(Vertex a, Vertex b) const {
  const auto& nbrs = adjacency_[a];
  return std::binary_search(nbrs.begin(), nbrs.end(), b);
}

std::optional<std::size_t> Graph::edge_index(Vertex a, Vertex b) const {
  const Edge key(a, b);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
  if (it == edges_.end() || *it != key) return std::nullopt;
  return static_cast<std::size_t>(it - edges_.begin());
}

Vertex GraphBuilder::add_vertex(const std::string& name) {
  auto [it, inserted] = index_.emplace(name, static_cast<Vertex>(names_.size()));
  if (inserted) names_.push_back(name);
  return it->second;
}

void GraphBuilder::add_edge(const std::string& a, const std::string& b) {
  if (a == b) throw Error(ErrorKind::Validation, "self-loop at '" + a + "'");
  const Vertex va = add_vertex(a);
  const Vertex vb = add_vertex(b);
  edges_.emplace_back(va, vb);
}

void GraphBuilder::add_edge(Vertex a, Vertex b) {
  if (a == b) throw Error(ErrorKind::Validation, "self-loop");
  edges_.emplace_back(a, b);
}

Graph GraphBuilder::build() const { return Graph::from_edges(names_, edges_); }

std::size_t component_count(const Graph& g) {
  const auto n = g.vertex_count();
  std::vector<char> seen(n, 0);
  std::vector<Vertex> stack;
  std::size_t components = 0;
  for (Vertex s = 0; s < n; ++s) {
    if (seen[s]) continue;
    ++components;
    seen[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(v)) {
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
  }
  return components;
}

bool is_connected(const Graph& g) { return component_count(g) <= 1; }

bool is_tree(const Graph& g) {
  return g.vertex_count() >= 1 && g.edge_count() + 1 == g.vertex_count() && is_connected(g);
}

bool is_path(const Graph& g) { return is_tree(g) && g.max_degree() <= 2; }

std::size_t BlockDecomposition::cut_count(std::size_t block) const {
  std::size_t c = 0;
  for (Vertex v : block_vertices[block]) c += is_cut_vertex(v) ? 1 : 0;
  return c;
}

std::vector<std::size_t> BlockDecomposition::end_blocks() const {
  std::vector<std::size_t> out;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (cut_count(b) <= 1) out.push_back(b);
  }
  return out;
}

std::vector<std::size_t> BlockDecomposition::two_blocks() const {
  std::vector<std::size_t> out;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (block_vertices[b].size() >= 3) out.push_back(b);
  }
  return out;
}

bool BlockDecomposition::is_cut_vertex(Vertex v) const {
  return std::binary_search(cut_vertices.begin(), cut_vertices.end(), v);
}

BlockDecomposition blocks_and_cuts(const Graph& g) {
  if (!is_connected(g)) throw Error(ErrorKind::NotConnected, "graph is not connected");
  BlockDecomposition out;
  const auto n = g.vertex_count();
  if (n == 0) {
    out.is_block_chain = true;
    return out;
  }

  // Iterative Hopcroft-Tarjan over an explicit frame stack.
  constexpr std::size_t kUnvisited = static_cast<std::size_t>(-1);
  std::vector<std::size_t> disc(n, kUnvisited), low(n, 0);
  std::vector<char> is_cut(n, 0);
  std::vector<std::size_t> edge_stack;
  struct Frame {
    Vertex v;
    Vertex parent;
    std::size_t next;  // position in neighbor list
  };
  std::vector<Frame> frames;
  std::size_t timer = 0;
  std::size_t root_children = 0;
  const Vertex root = 0;
  disc[root] = low[root] = timer++;
  frames.push_back({root, root, 0});

  auto close_block = [&](std::size_t stop_edge) {
    std::vector<std::size_t> block;
    while (true) {
      const std::size_t e = edge_stack.back();
      edge_stack.pop_back();
      block.push_back(e);
      if (e == stop_edge) break;
    }
    std::sort(block.begin(), block.end());
    out.blocks.push_back(std::move(block));
  };

  while (!frames.empty()) {
    Frame& f = frames.back();
    const auto nbrs = g.neighbors(f.v);
    if (f.next < nbrs.size()) {
      const Vertex w = nbrs[f.next++];
      const std::size_t e = *g.edge_index(f.v, w);
      if (disc[w] == kUnvisited) {
        edge_stack.push_back(e);
        disc[w] = low[w] = timer++;
        frames.push_back({w, f.v, 0});
      } else if (w != f.parent && disc[w] < disc[f.v]) {
        // back edge to an ancestor
        edge_stack.push_back(e);
        low[f.v] = std::min(low[f.v], disc[w]);
      }
      continue;
    }
    const Frame done = f;
    frames.pop_back();
    if (frames.empty()) break;
    Frame& parent = frames.back();
    low[parent.v] = std::min(low[parent.v], low[done.v]);
    if (low[done.v] >= disc[parent.v]) {
      if (parent.v != root) {
        is_cut[parent.v] = 1;
      } else {
        ++root_children;
      }
      close_block(*g.edge_index(parent.v, done.v));
    }
  }
  if (root_children >= 2) is_cut[root] = 1;

  for (const auto& block : out.blocks) {
    std::vector<Vertex> verts;
    for (std::size_t e : block) {
      verts.push_back(g.edges()[e].u);
      verts.push_back(g.edges()[e].v);
    }
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    out.block_vertices.push_back(std::move(verts));
    if (block.size() == 1) out.bridges.push_back(block.front());
  }
  std::sort(out.bridges.begin(), out.bridges.end());
  for (Vertex v = 0; v < n; ++v) {
    if (is_cut[v]) out.cut_vertices.push_back(v);
  }

  // The block-cut tree is a path iff no node has degree above two.
  bool chain = true;
  for (std::size_t b = 0; b < out.blocks.size() && chain; ++b) {
    if (out.cut_count(b) > 2) chain = false;
  }
  if (chain) {
    std::vector<std::size_t> blocks_at(n, 0);
    for (const auto& verts : out.block_vertices) {
      for (Vertex v : verts) ++blocks_at[v];
    }
    for (Vertex c : out.cut_vertices) {
      if (blocks_at[c] > 2) chain = false;
    }
  }
  out.is_block_chain = chain;
  return out;
}

bool is_block_chain(const Graph& g) { return blocks_and_cuts(g).is_block_chain; }

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  std::vector<std::string> names;
  std::unordered_map<Vertex, Vertex> local;
  names.reserve(vertices.size());
  for (Vertex v : vertices) {
    local.emplace(v, static_cast<Vertex>(names.size()));
    names.push_back(g.name(v));
  }
  std::vector<Edge> edges;
  for (Vertex v : vertices) {
    for (Vertex w : g.neighbors(v)) {
      if (v < w) {
        auto it = local.find(w);
        if (it != local.end()) edges.emplace_back(local.at(v), it->second);
      }
    }
  }
  return Graph::from_edges(std::move(names), std::move(edges));
}

}  // namespace hpidx
