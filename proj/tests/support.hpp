#pragma once

// Brute-force reference implementations. Nothing here calls into the
// library's algorithms, so agreement with them is a genuine cross-check.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "hpidx/graph.hpp"

namespace ref {

/// Adjacency-matrix graph on 0..n-1.
struct Mat {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::vector<char>> adj;

  explicit Mat(int size = 0) : n(size), adj(size, std::vector<char>(size, 0)) {}

  void add(int a, int b) {
    if (a == b || adj[a][b]) return;
    adj[a][b] = adj[b][a] = 1;
    edges.emplace_back(std::min(a, b), std::max(a, b));
  }
  int degree(int v) const { return static_cast<int>(std::count(adj[v].begin(), adj[v].end(), 1)); }
};

inline Mat from(const hpidx::Graph& g) {
  Mat m(static_cast<int>(g.vertex_count()));
  for (const auto& e : g.edges()) m.add(static_cast<int>(e.u), static_cast<int>(e.v));
  return m;
}

inline hpidx::Graph to_graph(const Mat& m) {
  std::vector<std::pair<hpidx::Vertex, hpidx::Vertex>> es;
  for (auto [a, b] : m.edges) es.emplace_back(a, b);
  return hpidx::Graph::from_index_edges(m.n, es);
}

/// Components reachable while ignoring one vertex and/or one edge.
inline int components(const Mat& m, int skip_vertex = -1, int skip_edge = -1) {
  std::vector<int> comp(m.n, -1);
  int count = 0;
  for (int s = 0; s < m.n; ++s) {
    if (s == skip_vertex || comp[s] >= 0) continue;
    comp[s] = count;
    std::vector<int> stack{s};
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (std::size_t i = 0; i < m.edges.size(); ++i) {
        if (static_cast<int>(i) == skip_edge) continue;
        auto [a, b] = m.edges[i];
        int w = -1;
        if (a == v) w = b;
        if (b == v) w = a;
        if (w < 0 || w == skip_vertex || comp[w] >= 0) continue;
        comp[w] = count;
        stack.push_back(w);
      }
    }
    ++count;
  }
  return count;
}

inline bool connected(const Mat& m) { return m.n > 0 && components(m) == 1; }

inline std::set<std::pair<int, int>> bridges(const Mat& m) {
  std::set<std::pair<int, int>> out;
  const int base = components(m);
  for (std::size_t i = 0; i < m.edges.size(); ++i) {
    if (components(m, -1, static_cast<int>(i)) > base) out.insert(m.edges[i]);
  }
  return out;
}

inline std::set<int> cut_vertices(const Mat& m) {
  std::set<int> out;
  const int base = components(m);
  for (int v = 0; v < m.n; ++v) {
    if (m.degree(v) > 0 && components(m, v) > base) out.insert(v);
  }
  return out;
}

/// Blocks as sets of edge indices. Two edges sharing a vertex v lie in the
/// same block iff their far endpoints stay connected without v; blocks are
/// the closure of that relation.
inline std::vector<std::set<int>> blocks(const Mat& m) {
  const int E = static_cast<int>(m.edges.size());
  std::vector<int> parent(E);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (int i = 0; i < E; ++i) {
    for (int j = i + 1; j < E; ++j) {
      auto [a, b] = m.edges[i];
      auto [c, d] = m.edges[j];
      int shared = -1, x = -1, y = -1;
      if (a == c) shared = a, x = b, y = d;
      else if (a == d) shared = a, x = b, y = c;
      else if (b == c) shared = b, x = a, y = d;
      else if (b == d) shared = b, x = a, y = c;
      if (shared < 0) continue;
      // x and y connected in m - shared?
      Mat h(m.n);
      for (auto [p, q] : m.edges) {
        if (p != shared && q != shared) h.add(p, q);
      }
      std::vector<char> seen(m.n, 0);
      std::vector<int> stack{x};
      seen[x] = 1;
      while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (int w = 0; w < m.n; ++w) {
          if (h.adj[v][w] && !seen[w]) seen[w] = 1, stack.push_back(w);
        }
      }
      if (seen[y]) parent[find(i)] = find(j);
    }
  }
  std::map<int, std::set<int>> groups;
  for (int i = 0; i < E; ++i) groups[find(i)].insert(i);
  std::vector<std::set<int>> out;
  for (auto& [r, s] : groups) out.push_back(s);
  return out;
}

/// Plain depth-first hamiltonian path search, no pruning.
inline bool traceable(const Mat& m) {
  if (m.n <= 1) return m.n == 1;
  std::vector<char> used(m.n, 0);
  std::function<bool(int, int)> go = [&](int v, int depth) {
    if (depth == m.n) return true;
    for (int w = 0; w < m.n; ++w) {
      if (!m.adj[v][w] || used[w]) continue;
      used[w] = 1;
      if (go(w, depth + 1)) return true;
      used[w] = 0;
    }
    return false;
  };
  for (int s = 0; s < m.n; ++s) {
    used.assign(m.n, 0);
    used[s] = 1;
    if (go(s, 1)) return true;
  }
  return false;
}

inline bool hamiltonian(const Mat& m) {
  if (m.n < 3) return false;
  std::vector<char> used(m.n, 0);
  std::function<bool(int, int)> go = [&](int v, int depth) {
    if (depth == m.n) return m.adj[v][0] == 1;
    for (int w = 1; w < m.n; ++w) {
      if (!m.adj[v][w] || used[w]) continue;
      used[w] = 1;
      if (go(w, depth + 1)) return true;
      used[w] = 0;
    }
    return false;
  };
  used[0] = 1;
  return go(0, 1);
}

/// Line graph straight from the definition: vertex i is edge i, adjacent
/// when the edges share exactly one endpoint.
inline Mat line(const Mat& m) {
  const int E = static_cast<int>(m.edges.size());
  Mat l(E);
  for (int i = 0; i < E; ++i) {
    for (int j = i + 1; j < E; ++j) {
      auto [a, b] = m.edges[i];
      auto [c, d] = m.edges[j];
      const int shared = (a == c) + (a == d) + (b == c) + (b == d);
      if (shared == 1) l.add(i, j);
    }
  }
  return l;
}

/// Least n with L^n traceable, or -1 past `max_stage`.
inline int hp_index(Mat m, int max_stage) {
  for (int n = 0; n <= max_stage; ++n) {
    if (traceable(m)) return n;
    if (m.edges.empty()) return -1;
    m = line(m);
  }
  return -1;
}

inline int h_index(Mat m, int max_stage) {
  for (int n = 0; n <= max_stage; ++n) {
    if (hamiltonian(m)) return n;
    if (m.edges.empty()) return -1;
    m = line(m);
  }
  return -1;
}

/// Dominating (closed) trail by edge subsets: the edge set of a trail is a
/// connected subgraph with zero or two odd vertices (zero when closed). The
/// closed variant also admits a single vertex meeting every edge.
inline bool dominating_trail(const Mat& m, bool closed) {
  const int E = static_cast<int>(m.edges.size());
  if (closed) {
    for (int v = 0; v < m.n; ++v) {
      if (m.degree(v) == E) return true;
    }
  }
  for (std::uint32_t s = 1; s < (1u << E); ++s) {
    std::vector<int> deg(m.n, 0);
    Mat sub(m.n);
    for (int i = 0; i < E; ++i) {
      if (s >> i & 1) {
        ++deg[m.edges[i].first];
        ++deg[m.edges[i].second];
        sub.add(m.edges[i].first, m.edges[i].second);
      }
    }
    int odd = 0, touched = 0;
    for (int v = 0; v < m.n; ++v) {
      odd += deg[v] % 2;
      touched += deg[v] > 0;
    }
    if (odd > (closed ? 0 : 2)) continue;
    // Edge set connected: touched vertices form one component of sub.
    if (components(sub) - (m.n - touched) != 1) continue;
    bool dom = true;
    for (auto [a, b] : m.edges) dom = dom && (deg[a] > 0 || deg[b] > 0);
    if (dom) return true;
  }
  return false;
}

/// Isomorphism by trying every permutation; small n only.
inline bool isomorphic(const Mat& a, const Mat& b) {
  if (a.n != b.n || a.edges.size() != b.edges.size()) return false;
  std::vector<int> p(a.n);
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (auto [u, v] : a.edges) {
      if (!b.adj[p[u]][p[v]]) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

/// AHU code of a free tree rooted at its center(s): equal codes iff the
/// trees are isomorphic.
inline std::string tree_code(const Mat& t) {
  if (t.n == 1) return "()";
  std::vector<int> deg(t.n);
  for (int v = 0; v < t.n; ++v) deg[v] = t.degree(v);
  std::vector<int> layer, alive(t.n, 1);
  int remaining = t.n;
  for (int v = 0; v < t.n; ++v) {
    if (deg[v] <= 1) layer.push_back(v);
  }
  while (remaining > 2) {
    std::vector<int> next;
    for (int v : layer) {
      alive[v] = 0;
      --remaining;
      for (int w = 0; w < t.n; ++w) {
        if (t.adj[v][w] && alive[w] && --deg[w] == 1) next.push_back(w);
      }
    }
    layer = next;
  }
  std::vector<int> centers;
  for (int v = 0; v < t.n; ++v) {
    if (alive[v]) centers.push_back(v);
  }
  std::function<std::string(int, int)> code = [&](int v, int parent) {
    std::vector<std::string> kids;
    for (int w = 0; w < t.n; ++w) {
      if (t.adj[v][w] && w != parent) kids.push_back(code(w, v));
    }
    std::sort(kids.begin(), kids.end());
    std::string s = "(";
    for (auto& k : kids) s += k;
    return s + ")";
  };
  if (centers.size() == 1) return code(centers[0], -1);
  const std::string a = code(centers[0], centers[1]), b = code(centers[1], centers[0]);
  return std::min(a, b) + std::max(a, b);
}

/// Every labeled tree on n >= 3 vertices from its Prüfer sequence.
inline void for_each_labeled_tree(int n, const std::function<void(const Mat&)>& visit) {
  std::vector<int> seq(n - 2, 0);
  while (true) {
    std::vector<int> deg(n, 1);
    for (int x : seq) ++deg[x];
    Mat t(n);
    for (int x : seq) {
      int leaf = 0;
      while (deg[leaf] != 1) ++leaf;
      t.add(leaf, x);
      --deg[leaf];
      --deg[x];
    }
    int u = -1, w = -1;
    for (int v = 0; v < n; ++v) {
      if (deg[v] == 1) (u < 0 ? u : w) = v;
    }
    t.add(u, w);
    visit(t);
    int i = 0;
    while (i < n - 2 && ++seq[i] == n) seq[i++] = 0;
    if (i == n - 2) break;
  }
}

/// Random connected graph for property runs: a random spanning tree by
/// attaching each vertex to an earlier one, plus extra edges.
inline Mat random_connected(std::mt19937_64& rng, int n, double p) {
  Mat m(n);
  for (int v = 1; v < n; ++v) m.add(v, static_cast<int>(rng() % static_cast<std::uint64_t>(v)));
  std::bernoulli_distribution coin(p);
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (coin(rng)) m.add(a, b);
    }
  }
  // Shuffle labels so the spanning tree is not visible in the numbering.
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  Mat out(n);
  for (auto [a, b] : m.edges) out.add(perm[a], perm[b]);
  return out;
}

inline Mat permuted(const Mat& m, std::mt19937_64& rng) {
  std::vector<int> perm(m.n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  Mat out(m.n);
  for (auto [a, b] : m.edges) out.add(perm[a], perm[b]);
  return out;
}

}  // namespace ref
