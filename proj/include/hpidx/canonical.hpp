#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hpidx/graph.hpp"

namespace hpidx {

inline constexpr std::size_t kDefaultCanonicalCap = 16;

/// Isomorphism-invariant byte string: equal keys iff isomorphic graphs.
///
/// Computed by colour refinement plus individualisation search over the
/// refinement tree, with pruning by automorphisms discovered at the leaves.
/// The key is the vertex count followed by the packed upper triangle of the
/// adjacency matrix under the lexicographically greatest leaf labeling.
std::string canonical_key(const Graph& g, std::size_t cap = kDefaultCanonicalCap);

/// Vertex order realising canonical_key: position i holds the original vertex.
std::vector<Vertex> canonical_order(const Graph& g, std::size_t cap = kDefaultCanonicalCap);

/// Hex rendering of a key, for reports.
std::string key_to_hex(const std::string& key);

}  // namespace hpidx
