#include "hpidx/search.hpp"

#include <algorithm>
#include <bit>
#include <random>

#include "hpidx/errors.hpp"

namespace hpidx::search {
namespace {

inline std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

class Backtracker {
 public:
  Backtracker(const SmallGraph& g, std::uint64_t ends, const Deadline& deadline, std::uint64_t node_limit)
      : g_(g), ends_(ends), deadline_(deadline), node_limit_(node_limit) {}

  bool run_from(int start) {
    path_.assign(1, start);
    return extend(start, g_.all() & ~bit(start));
  }

  const std::vector<int>& path() const { return path_; }

 private:
  // Necessary condition for a path from `cur` through all of `within` that
  // ends in ends_. G[within] must be connected with cur not a cut vertex.
  // Any other cut vertex splits off one piece, which must hold an end.
  bool viable(int cur, std::uint64_t within) {
    visited_ = 0;
    clock_ = 0;
    within_ = within;
    bad_ = false;
    int root_children = 0;
    disc_[cur] = low_[cur] = ++clock_;
    visited_ |= bit(cur);
    for (std::uint64_t m = g_.adj[cur] & within; m; m &= m - 1) {
      const int w = std::countr_zero(m);
      if (visited_ & bit(w)) continue;
      ++root_children;
      lowpoint(w, cur);
      if (bad_) return false;
    }
    return visited_ == within && (root_children <= 1 || within == bit(cur));
  }

  // Returns whether the DFS subtree of v contains an end vertex.
  bool lowpoint(int v, int parent) {
    disc_[v] = low_[v] = ++clock_;
    visited_ |= bit(v);
    bool has_end = (ends_ >> v) & 1;
    int split = 0;
    for (std::uint64_t m = g_.adj[v] & within_; m; m &= m - 1) {
      const int w = std::countr_zero(m);
      if (visited_ & bit(w)) {
        if (w != parent) low_[v] = std::min(low_[v], disc_[w]);
        continue;
      }
      const bool child_end = lowpoint(w, v);
      if (bad_) return false;
      has_end = has_end || child_end;
      low_[v] = std::min(low_[v], low_[w]);
      if (low_[w] >= disc_[v]) {
        // v separates w's subtree from cur: the path must finish there.
        if (++split > 1 || !child_end) bad_ = true;
      }
    }
    return has_end;
  }

  bool extend(int cur, std::uint64_t remaining) {
    if (remaining == 0) return (ends_ >> cur) & 1;
    if ((++nodes_ & 1023) == 0 && deadline_.expired()) {
      throw Error(ErrorKind::Capped, "hamiltonian search exceeded its time limit");
    }
    if (node_limit_ != 0 && nodes_ > node_limit_) {
      throw Error(ErrorKind::Capped, "hamiltonian search exceeded its node limit");
    }
    const std::uint64_t avail = remaining | bit(cur);
    if (!viable(cur, avail)) return false;

    // A remaining vertex with a single available neighbour must be the last
    // vertex of the path.
    std::uint64_t forced_end = 0;
    for (std::uint64_t m = remaining; m; m &= m - 1) {
      const int w = std::countr_zero(m);
      const int d = std::popcount(g_.adj[w] & avail);
      if (d == 0) return false;
      if (d == 1) {
        if (!((ends_ >> w) & 1) || forced_end) return false;
        forced_end = bit(w);
      }
    }
    const bool last_step = std::popcount(remaining) == 1;

    int order[64];
    int count = 0;
    for (std::uint64_t m = g_.adj[cur] & remaining; m; m &= m - 1) {
      const int w = std::countr_zero(m);
      if (!last_step && (bit(w) & forced_end)) continue;
      order[count++] = w;
    }
    std::sort(order, order + count, [&](int a, int b) {
      const int da = std::popcount(g_.adj[a] & remaining);
      const int db = std::popcount(g_.adj[b] & remaining);
      return da != db ? da < db : a < b;
    });
    for (int i = 0; i < count; ++i) {
      const int w = order[i];
      path_.push_back(w);
      if (extend(w, remaining & ~bit(w))) return true;
      path_.pop_back();
    }
    return false;
  }

  const SmallGraph& g_;
  std::uint64_t ends_;
  const Deadline& deadline_;
  std::uint64_t node_limit_;
  std::vector<int> path_;
  std::uint64_t nodes_ = 0;
  // lowpoint scratch
  int disc_[64] = {};
  int low_[64] = {};
  int clock_ = 0;
  std::uint64_t visited_ = 0;
  std::uint64_t within_ = 0;
  bool bad_ = false;
};

}  // namespace

SmallGraph SmallGraph::from(const Graph& g) {
  if (g.vertex_count() > 64) {
    throw Error(ErrorKind::Capped, "graph too large for bitmask search (" +
                                       std::to_string(g.vertex_count()) + " vertices)");
  }
  SmallGraph s;
  s.n = g.vertex_count();
  s.adj.assign(s.n, 0);
  for (const Edge& e : g.edges()) {
    s.adj[e.u] |= bit(static_cast<int>(e.v));
    s.adj[e.v] |= bit(static_cast<int>(e.u));
  }
  return s;
}

std::optional<std::vector<int>> path_dp(const SmallGraph& g, std::uint64_t starts, std::uint64_t ends) {
  if (g.n == 0) return std::nullopt;
  if (g.n > kMaxDpVertices) throw Error(ErrorKind::Capped, "subset DP limited to 26 vertices");
  const std::uint32_t full = static_cast<std::uint32_t>(g.all());
  starts &= full;
  ends &= full;
  // dp[mask] = set of vertices v such that some path over exactly `mask`
  // starts in `starts` and ends at v.
  std::vector<std::uint32_t> dp(std::size_t{1} << g.n, 0);
  for (std::uint64_t m = starts; m; m &= m - 1) {
    const int v = std::countr_zero(m);
    dp[bit(v)] |= static_cast<std::uint32_t>(bit(v));
  }
  for (std::uint32_t mask = 1; mask < full; ++mask) {
    const std::uint32_t tails = dp[mask];
    if (!tails) continue;
    for (std::uint32_t t = tails; t; t &= t - 1) {
      const int v = std::countr_zero(t);
      for (std::uint32_t nx = static_cast<std::uint32_t>(g.adj[v]) & ~mask; nx; nx &= nx - 1) {
        const int w = std::countr_zero(nx);
        dp[mask | (1u << w)] |= 1u << w;
      }
    }
  }
  const std::uint32_t finals = dp[full] & static_cast<std::uint32_t>(ends);
  if (!finals) return std::nullopt;
  std::vector<int> path;
  int cur = std::countr_zero(finals);
  std::uint32_t mask = full;
  path.push_back(cur);
  while (std::popcount(mask) > 1) {
    const std::uint32_t prev = mask & ~(1u << cur);
    const std::uint32_t options = dp[prev] & static_cast<std::uint32_t>(g.adj[cur]);
    cur = std::countr_zero(options);
    path.push_back(cur);
    mask = prev;
  }
  std::reverse(path.begin(), path.end());
  return path;
}

std::optional<std::vector<int>> path_backtrack(const SmallGraph& g, std::uint64_t starts,
                                               std::uint64_t ends, const Deadline& deadline,
                                               std::uint64_t node_limit) {
  if (g.n == 0) return std::nullopt;
  starts &= g.all();
  ends &= g.all();
  std::vector<int> order;
  for (std::uint64_t m = starts; m; m &= m - 1) order.push_back(std::countr_zero(m));
  // Degree-1 vertices must be endpoints; try low-degree starts first.
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return std::popcount(g.adj[a]) < std::popcount(g.adj[b]);
  });
  Backtracker bt(g, ends, deadline, node_limit);
  for (int s : order) {
    if (bt.run_from(s)) return bt.path();
  }
  return std::nullopt;
}

std::optional<std::vector<int>> path_rotation(const SmallGraph& g, std::uint64_t starts, std::uint64_t ends,
                                              std::size_t steps) {
  const int n = static_cast<int>(g.n);
  starts &= g.all();
  ends &= g.all();
  if (n == 0 || !starts || !ends) return std::nullopt;
  if (n == 1) return starts & ends ? std::optional<std::vector<int>>(std::vector<int>{0}) : std::nullopt;
  std::mt19937_64 rng(0x9e3779b97f4a7c15ULL ^ static_cast<std::uint64_t>(n));
  std::vector<int> path, pos(n, -1);
  int tried = 0;
  for (std::uint64_t sm = starts; sm && tried < 8; sm &= sm - 1, ++tried) {
    const int s = std::countr_zero(sm);
    path.assign(1, s);
    std::fill(pos.begin(), pos.end(), -1);
    pos[s] = 0;
    std::uint64_t used = bit(s);
    for (std::size_t step = 0; step < steps; ++step) {
      const int end = path.back();
      if (path.size() == static_cast<std::size_t>(n) && ((ends >> end) & 1)) return path;
      const std::uint64_t fresh = g.adj[end] & ~used;
      if (fresh) {
        // Extend towards the unused neighbour with fewest unused neighbours.
        int best = -1, best_deg = 65;
        for (std::uint64_t m = fresh; m; m &= m - 1) {
          const int w = std::countr_zero(m);
          const int d = std::popcount(g.adj[w] & ~used);
          if (d < best_deg || (d == best_deg && (rng() & 1))) best = w, best_deg = d;
        }
        pos[best] = static_cast<int>(path.size());
        path.push_back(best);
        used |= bit(best);
        continue;
      }
      // Rotate: end joins p_i, the segment after p_i reverses, p_{i+1} is the new end.
      int pivots[64];
      int count = 0;
      for (std::uint64_t m = g.adj[end] & used; m; m &= m - 1) {
        const int w = std::countr_zero(m);
        if (pos[w] < static_cast<int>(path.size()) - 2) pivots[count++] = w;
      }
      if (count == 0) break;
      const int i = pos[pivots[rng() % static_cast<std::uint64_t>(count)]];
      std::reverse(path.begin() + i + 1, path.end());
      for (std::size_t j = static_cast<std::size_t>(i) + 1; j < path.size(); ++j) pos[path[j]] = static_cast<int>(j);
    }
  }
  return std::nullopt;
}

}  // namespace hpidx::search
