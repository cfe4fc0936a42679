#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "hpidx/graph.hpp"

namespace hpidx::search {

/// Up to 64 vertices with bitmask adjacency.
struct SmallGraph {
  std::size_t n = 0;
  std::vector<std::uint64_t> adj;

  /// Throws Error(Capped) above 64 vertices.
  static SmallGraph from(const Graph& g);
  std::uint64_t all() const { return n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1; }
};

class Deadline {
 public:
  using Clock = std::chrono::steady_clock;
  explicit Deadline(std::chrono::milliseconds limit) : end_(Clock::now() + limit) {}
  bool expired() const { return Clock::now() >= end_; }

 private:
  Clock::time_point end_;
};

/// Largest vertex count the subset DP accepts regardless of configuration.
inline constexpr std::size_t kMaxDpVertices = 26;

/// Hamiltonian path by subset dynamic programming over (visited set, end
/// vertex). The path must start in `starts` and end in `ends` (bitmasks).
/// Returns the vertex sequence, or nullopt if none exists.
std::optional<std::vector<int>> path_dp(const SmallGraph& g, std::uint64_t starts, std::uint64_t ends);

/// Same contract as path_dp, by depth-first search with connectivity and
/// dead-end pruning. Throws Error(Capped) once the deadline passes or more
/// than `node_limit` nodes are expanded (0 = no node limit).
std::optional<std::vector<int>> path_backtrack(const SmallGraph& g, std::uint64_t starts,
                                               std::uint64_t ends, const Deadline& deadline,
                                               std::uint64_t node_limit = 0);

/// Rotation-extension heuristic with a fixed seed: grows a path from a
/// vertex in `starts`, rotating its free end when stuck, for at most
/// `steps` moves per start. A returned path is always valid; nullopt says
/// nothing about existence.
std::optional<std::vector<int>> path_rotation(const SmallGraph& g, std::uint64_t starts, std::uint64_t ends,
                                              std::size_t steps);

}  // namespace hpidx::search
