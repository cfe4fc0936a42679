#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "hpidx/graph.hpp"

namespace hpidx {

// Named families. Vertices are named "0".."n-1" unless stated otherwise.
Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph complete_graph(std::size_t n);
Graph star_graph(std::size_t leaves);  // K_{1,leaves}, center "0"
/// One center with a pendant path of each given length.
Graph spider(const std::vector<std::size_t>& legs);
/// Two centers joined by a path of `internal` edges, each with its own legs.
Graph double_spider(const std::vector<std::size_t>& left_legs, std::size_t internal,
                    const std::vector<std::size_t>& right_legs);

/// One tree per isomorphism class on n vertices (1 <= n <= 14), in
/// canonical level-sequence order (Wright-Richmond-Odlyzko-McKay successor
/// rule over Beyer-Hedetniemi rooted-tree generation). Vertex i of each tree
/// is position i of its level sequence.
std::vector<Graph> enumerate_free_trees(std::size_t n);
void for_each_free_tree(std::size_t n, const std::function<void(const Graph&)>& visit);

/// Every labeled connected graph on vertices "1".."n", 2 <= n <= 6, in
/// increasing order of the edge bitmask over pairs (1,2),(1,3),...,(n-1,n).
std::vector<Graph> enumerate_connected_graphs(std::size_t n);

/// Uniform labeled tree on n >= 2 vertices, decoded from a Prüfer sequence.
///
/// The generator is std::mt19937_64 seeded with `seed`; each sequence entry
/// is drawn by rejection sampling (discard raw outputs below 2^64 mod n,
/// then reduce mod n), so the output is identical on every platform.
Graph random_tree(std::size_t n, std::uint64_t seed);

/// Seeded random connected graph: a random tree plus each remaining pair
/// with probability `extra_edge_probability`. Same generator contract.
Graph random_connected_graph(std::size_t n, std::uint64_t seed, double extra_edge_probability);

/// Graphs built from trees by gluing small hamiltonian 2-blocks (cycles
/// and cliques) onto chosen vertices, one gadget per vertex.
struct FamilyParams {
  std::size_t max_vertices = 12;
  std::vector<std::size_t> cycle_sizes{3, 4, 5};
  std::vector<std::size_t> clique_sizes{};
  /// Emit the base trees themselves as well.
  bool include_trees = true;
  /// Emit only the base trees; gadgets are ignored.
  bool trees_only = false;
};

struct FamilyMember {
  Graph graph;
  std::string tag;  // provenance, e.g. "tree7#3+C3@0+C4@5"
  std::string key;  // canonical key
};

/// Deduplicated by canonical key; the first construction of each class is
/// kept. Throws Error(Precondition) for invalid parameters.
std::vector<FamilyMember> gen_hamiltonian_2block_family(const FamilyParams& params);

}  // namespace hpidx
