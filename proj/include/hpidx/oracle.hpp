#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hpidx/graph.hpp"
#include "hpidx/line_graph.hpp"

namespace hpidx {

/// Limits for the exact solvers.
///
/// Hamiltonian queries are reduced to the blocks of the graph along its
/// block-cutvertex chain; the vertex caps apply to the largest block. Blocks
/// up to dp_vertex_cap vertices are solved by subset DP, larger ones up to
/// backtrack_vertex_cap by backtracking, anything beyond is capped.
struct SearchBudget {
  std::size_t dp_vertex_cap = 24;
  std::size_t backtrack_vertex_cap = 40;
  std::chrono::milliseconds time_limit{30'000};
  /// Backtracking nodes per query; 0 means unlimited. Unlike the time
  /// limit this cap is machine-independent.
  std::uint64_t node_limit = 0;
  /// Try a seeded rotation-extension search before the exhaustive one. A
  /// path it finds is checked and exact; blocks above the exhaustive caps
  /// (up to 64 vertices) are then answered positively or capped.
  bool heuristic = true;
  IterationBudget iteration_budget{};
};

struct HamiltonianResult {
  bool found = false;
  std::vector<Vertex> witness;  // path, or cycle without the repeated start
};

/// Throws Error(Capped) when a block exceeds the caps or time runs out.
/// Disconnected graphs are answered false immediately.
HamiltonianResult has_hamiltonian_path(const Graph& g, const SearchBudget& budget = {});
HamiltonianResult has_hamiltonian_cycle(const Graph& g, const SearchBudget& budget = {});

/// Exactness limit for the dominating-trail searches.
inline constexpr std::size_t kMaxTrailEdges = 20;

struct TrailResult {
  bool found = false;
  /// Vertex sequence of the trail. A closed trail repeats its first vertex at
  /// the end; the trivial closed trail is a single vertex.
  std::vector<Vertex> trail;
};

/// A trail with at least one edge such that every edge of g has an endpoint
/// on it. Exhaustive over (current vertex, used-edge set) states; throws
/// Error(Capped) above kMaxTrailEdges edges.
TrailResult has_dominating_trail(const Graph& g, const SearchBudget& budget = {});

/// Closed-trail variant. The single-vertex closed trail counts when every
/// edge meets that vertex.
TrailResult has_dominating_closed_trail(const Graph& g, const SearchBudget& budget = {});

// Witness checks.
bool is_hamiltonian_path(const Graph& g, std::span<const Vertex> path);
bool is_hamiltonian_cycle(const Graph& g, std::span<const Vertex> cycle);
/// Consecutive vertices adjacent and no edge used twice.
bool is_trail(const Graph& g, std::span<const Vertex> walk);
/// Every edge of g has an endpoint among the given vertices.
bool dominates_edges(const Graph& g, std::span<const Vertex> vertices);

enum class Verdict { Positive, Negative, Capped };
const char* to_string(Verdict v, bool traceability);

struct StageRecord {
  std::size_t n = 0;
  std::size_t vertices = 0;
  std::size_t edges = 0;
  Verdict verdict = Verdict::Capped;
};

/// Result of an index computation by iterating L and testing each stage.
struct IndexResult {
  bool traceability = true;               // h_p (true) or h (false)
  std::optional<std::size_t> value;       // nullopt when capped
  std::vector<StageRecord> stages;
  std::vector<std::string> witness;       // vertex names at the positive stage, when small
  std::string capped_reason;
  /// Dominating-trail test on the input, recorded when stage 1 is decided.
  std::optional<bool> dominating_trail_check;

  bool capped() const { return !value.has_value(); }
};

/// Least n with L^n(g) traceable. Throws Error(NotConnected).
IndexResult hp_oracle(const Graph& g, const SearchBudget& budget = {});

/// Least n with L^n(g) hamiltonian. Throws Error(Precondition) for paths,
/// where it does not exist.
IndexResult h_oracle(const Graph& g, const SearchBudget& budget = {});

}  // namespace hpidx
