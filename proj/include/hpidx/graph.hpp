#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace hpidx {

using Vertex = std::uint32_t;

/// Unordered edge stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  Vertex other(Vertex x) const { return x == u ? v : u; }
  bool has(Vertex x) const { return x == u || x == v; }

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Finite simple undirected graph.
///
/// Vertices are dense indices 0..n-1, each carrying an opaque string token
/// kept for output. Edges are sorted and unique; neighbor lists are sorted.
/// Instances are immutable once built.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph from named vertices and index pairs. Duplicate edges
  /// collapse; self-loops and duplicate names throw a validation error.
  static Graph from_edges(std::vector<std::string> names,
                          std::vector<Edge> edges);

  /// Unlabeled convenience constructor: vertices are named "0".."n-1".
  static Graph from_index_edges(std::size_t n,
                                const std::vector<std::pair<Vertex, Vertex>>& edges);

  std::size_t vertex_count() const { return names_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  std::size_t degree(Vertex v) const { return adjacency_[v].size(); }
  std::size_t max_degree() const;

  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(Vertex v) const { return names_[v]; }

  std::optional<Vertex> find(std::string_view name) const;
  bool has_edge(Vertex a, Vertex b) const;

  /// Index of edge {a,b} in edges(), if present.
  std::optional<std::size_t> edge_index(Vertex a, Vertex b) const;

 private:
  std::vector<std::string> names_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
  std::unordered_map<std::string, Vertex> index_;
};

/// Incremental construction by token.
class GraphBuilder {
 public:
  Vertex add_vertex(const std::string& name);
  void add_edge(const std::string& a, const std::string& b);
  void add_edge(Vertex a, Vertex b);
  std::size_t vertex_count() const { return names_.size(); }
  Graph build() const;

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, Vertex> index_;
  std::vector<Edge> edges_;
};

bool is_connected(const Graph& g);
bool is_tree(const Graph& g);
bool is_path(const Graph& g);

/// Biconnected-component decomposition of a connected graph.
struct BlockDecomposition {
  /// Edge indices (into Graph::edges()) of each block.
  std::vector<std::vector<std::size_t>> blocks;
  /// Sorted vertex set of each block.
  std::vector<std::vector<Vertex>> block_vertices;
  std::vector<Vertex> cut_vertices;
  /// Edge indices of bridges (blocks with exactly one edge).
  std::vector<std::size_t> bridges;
  bool is_block_chain = false;

  /// Number of cut vertices in block i.
  std::size_t cut_count(std::size_t block) const;
  /// Blocks containing at most one cut vertex.
  std::vector<std::size_t> end_blocks() const;
  /// Blocks with at least three vertices.
  std::vector<std::size_t> two_blocks() const;
  bool is_cut_vertex(Vertex v) const;
};

/// Throws Error(NotConnected) on disconnected input.
BlockDecomposition blocks_and_cuts(const Graph& g);

/// True iff the block-cutvertex graph of g is a path.
bool is_block_chain(const Graph& g);

/// Number of connected components (isolated vertices count).
std::size_t component_count(const Graph& g);

/// Subgraph induced on the given vertices; names are preserved.
Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

}  // namespace hpidx
