#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "hpidx/graph.hpp"

namespace hpidx {

/// A nontrivial path whose end vertices have degree != 2 and whose interior
/// vertices have degree exactly 2.
struct Branch {
  std::vector<Vertex> vertices;     // oriented so the smaller endpoint name comes first
  std::vector<std::size_t> edges;   // indices into Graph::edges(), sorted
  bool in_cb = false;               // every edge is a bridge
  bool in_cb1 = false;              // in_cb and some endpoint has degree 1

  std::size_t edge_count() const { return edges.size(); }
  Vertex front() const { return vertices.front(); }
  Vertex back() const { return vertices.back(); }

  friend bool operator==(const Branch&, const Branch&) = default;
};

/// B(G), ordered by vertex-name sequence. Walks that leave a vertex of
/// degree != 2 and return to it through degree-2 vertices are cycles, not
/// paths, and are not branches. A graph with no vertex of degree != 2
/// (a cycle) has no branches. Throws Error(NotConnected).
std::vector<Branch> branches(const Graph& g);

/// CB(G) subset of branches(g), in the same order.
std::vector<Branch> cb_branches(const Graph& g);

/// |E(b)| for CB1 branches, |E(b)|+1 for CB \ CB1. Throws Error(KUndefined)
/// for a branch outside CB.
std::size_t k_value(const Branch& b);

/// True iff deleting all leaves of the tree leaves a path (or nothing).
/// Throws Error(Precondition) for non-trees.
bool is_caterpillar(const Graph& t);

/// The unique path between two leaves of a tree with the branches it
/// fully contains.
struct Endpath {
  std::pair<Vertex, Vertex> leaves;        // first has the smaller name
  std::vector<Vertex> vertices;            // from leaves.first to leaves.second
  std::vector<std::size_t> contained;      // indices into the branch list used
};

/// One endpath per unordered leaf pair, ordered by leaf-name pair. Branch
/// indices refer to branches(t). Throws Error(Precondition) for paths and
/// non-trees.
std::vector<Endpath> endpaths(const Graph& t);

/// Endpaths of a tree whose containment sets are tested against arbitrary
/// edge sets (sorted indices into tree.edges()) rather than the tree's own
/// branches. Accepts paths.
std::vector<Endpath> endpaths_with(const Graph& tree,
                                   const std::vector<std::vector<std::size_t>>& edge_sets);

/// Distinct branch-index pairs (i < j) maximizing k(b_i) + k(b_j) over CB.
std::vector<std::pair<std::size_t, std::size_t>> maximal_pairs(const std::vector<Branch>& bs);
std::vector<std::pair<std::size_t, std::size_t>> maximal_pairs(const Graph& t);

/// A member of the candidate set: an endpath with the maximal pairs it covers.
struct CandidateEndpath {
  Endpath path;
  std::vector<std::pair<std::size_t, std::size_t>> covers;
};

/// Union over all maximal pairs of the endpaths containing both members.
/// Throws Error(Unreachable) carrying a serialized witness if it is empty.
std::vector<CandidateEndpath> candidate_endpaths(const Graph& t);

/// Lexicographic comparison of two leaf pairs by vertex names.
bool leaf_pair_less(const Graph& g, std::pair<Vertex, Vertex> a, std::pair<Vertex, Vertex> b);

}  // namespace hpidx
