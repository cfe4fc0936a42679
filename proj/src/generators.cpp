#include "hpidx/generators.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <queue>
#include <random>
#include <unordered_set>

#include "hpidx/canonical.hpp"
#include "hpidx/errors.hpp"

namespace hpidx {
namespace {

using Level = std::vector<int>;
using EdgePairs = std::vector<std::pair<Vertex, Vertex>>;

std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t n) {
  const std::uint64_t threshold = (0 - n) % n;
  while (true) {
    const std::uint64_t x = rng();
    if (x >= threshold) return x % n;
  }
}

// Beyer-Hedetniemi successor of a rooted level sequence. With `p` given the
// search for the last non-one entry is skipped.
std::optional<Level> next_rooted_tree(const Level& pred, std::optional<std::size_t> p = std::nullopt) {
  std::size_t pos;
  if (p) {
    pos = *p;
  } else {
    pos = pred.size() - 1;
    while (pred[pos] == 1) --pos;
  }
  if (pos == 0) return std::nullopt;
  std::size_t q = pos - 1;
  while (pred[q] != pred[pos] - 1) --q;
  Level result = pred;
  for (std::size_t i = pos; i < result.size(); ++i) result[i] = result[i - pos + q];
  return result;
}

// Left subtree of the root (levels shifted down) and the rest of the tree.
std::pair<Level, Level> split_tree(const Level& layout) {
  std::size_t m = layout.size();
  bool one_found = false;
  for (std::size_t i = 0; i < layout.size(); ++i) {
    if (layout[i] == 1) {
      if (one_found) {
        m = i;
        break;
      }
      one_found = true;
    }
  }
  Level left, rest{0};
  for (std::size_t i = 1; i < m; ++i) left.push_back(layout[i] - 1);
  for (std::size_t i = m; i < layout.size(); ++i) rest.push_back(layout[i]);
  return {left, rest};
}

// Either the candidate itself, when it is the canonical (centre-rooted)
// sequence of a free tree, or a jump towards the next such sequence.
Level next_tree(const Level& candidate) {
  const auto [left, rest] = split_tree(candidate);
  const int left_height = *std::max_element(left.begin(), left.end());
  const int rest_height = *std::max_element(rest.begin(), rest.end());
  bool valid = rest_height >= left_height;
  if (valid && rest_height == left_height) {
    if (left.size() > rest.size()) {
      valid = false;
    } else if (left.size() == rest.size() && left > rest) {
      valid = false;
    }
  }
  if (valid) return candidate;
  const std::size_t p = left.size();
  Level next = *next_rooted_tree(candidate, p);
  if (candidate[p] > 2) {
    const auto [new_left, new_rest] = split_tree(next);
    const int h = *std::max_element(new_left.begin(), new_left.end());
    const std::size_t len = static_cast<std::size_t>(h + 1);
    for (std::size_t i = 0; i < len; ++i) next[next.size() - len + i] = static_cast<int>(i + 1);
  }
  return next;
}

Graph layout_to_graph(const Level& layout) {
  EdgePairs edges;
  std::vector<std::size_t> stack;
  for (std::size_t i = 0; i < layout.size(); ++i) {
    if (!stack.empty()) {
      while (layout[stack.back()] >= layout[i]) stack.pop_back();
      edges.emplace_back(static_cast<Vertex>(stack.back()), static_cast<Vertex>(i));
    }
    stack.push_back(i);
  }
  return Graph::from_index_edges(layout.size(), edges);
}

Graph prufer_decode(const std::vector<std::size_t>& seq, std::size_t n) {
  std::vector<std::size_t> degree(n, 1);
  for (std::size_t x : seq) ++degree[x];
  std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> leaves;
  for (std::size_t v = 0; v < n; ++v) {
    if (degree[v] == 1) leaves.push(v);
  }
  EdgePairs edges;
  for (std::size_t x : seq) {
    const std::size_t leaf = leaves.top();
    leaves.pop();
    edges.emplace_back(static_cast<Vertex>(leaf), static_cast<Vertex>(x));
    if (--degree[x] == 1) leaves.push(x);
  }
  const std::size_t a = leaves.top();
  leaves.pop();
  const std::size_t b = leaves.top();
  edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
  return Graph::from_index_edges(n, edges);
}

}  // namespace

Graph path_graph(std::size_t n) {
  EdgePairs edges;
  for (Vertex i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph::from_index_edges(n, edges);
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw Error(ErrorKind::Precondition, "cycles need at least 3 vertices");
  EdgePairs edges;
  for (Vertex i = 0; i < n; ++i) edges.emplace_back(i, static_cast<Vertex>((i + 1) % n));
  return Graph::from_index_edges(n, edges);
}

Graph complete_graph(std::size_t n) {
  EdgePairs edges;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  }
  return Graph::from_index_edges(n, edges);
}

Graph star_graph(std::size_t leaves) { return spider(std::vector<std::size_t>(leaves, 1)); }

Graph spider(const std::vector<std::size_t>& legs) {
  EdgePairs edges;
  Vertex next = 1;
  for (std::size_t len : legs) {
    Vertex prev = 0;
    for (std::size_t i = 0; i < len; ++i) {
      edges.emplace_back(prev, next);
      prev = next++;
    }
  }
  return Graph::from_index_edges(next, edges);
}

Graph double_spider(const std::vector<std::size_t>& left_legs, std::size_t internal,
                    const std::vector<std::size_t>& right_legs) {
  if (internal == 0) throw Error(ErrorKind::Precondition, "internal branch needs at least one edge");
  EdgePairs edges;
  Vertex next = 1;
  auto add_legs = [&](Vertex center, const std::vector<std::size_t>& legs) {
    for (std::size_t len : legs) {
      Vertex prev = center;
      for (std::size_t i = 0; i < len; ++i) {
        edges.emplace_back(prev, next);
        prev = next++;
      }
    }
  };
  Vertex prev = 0;
  for (std::size_t i = 0; i < internal; ++i) {
    edges.emplace_back(prev, next);
    prev = next++;
  }
  const Vertex right_center = prev;
  add_legs(0, left_legs);
  add_legs(right_center, right_legs);
  return Graph::from_index_edges(next, edges);
}

void for_each_free_tree(std::size_t n, const std::function<void(const Graph&)>& visit) {
  if (n < 1 || n > 14) throw Error(ErrorKind::Precondition, "free-tree enumeration supports 1 <= n <= 14");
  if (n == 1) {
    visit(path_graph(1));
    return;
  }
  Level layout;
  for (int i = 0; i <= static_cast<int>(n / 2); ++i) layout.push_back(i);
  for (int i = 1; i < static_cast<int>((n + 1) / 2); ++i) layout.push_back(i);
  std::optional<Level> current = layout;
  while (current) {
    const Level tree = next_tree(*current);
    visit(layout_to_graph(tree));
    current = next_rooted_tree(tree);
  }
}

std::vector<Graph> enumerate_free_trees(std::size_t n) {
  std::vector<Graph> out;
  for_each_free_tree(n, [&](const Graph& g) { out.push_back(g); });
  return out;
}

std::vector<Graph> enumerate_connected_graphs(std::size_t n) {
  if (n < 2 || n > 6) throw Error(ErrorKind::Precondition, "labeled enumeration supports 2 <= n <= 6");
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  }
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back(std::to_string(i));
  std::vector<Graph> out;
  for (std::uint32_t mask = 1; mask < (1u << pairs.size()); ++mask) {
    // Union-find connectivity test before building the graph.
    std::vector<Vertex> parent(n);
    for (Vertex v = 0; v < n; ++v) parent[v] = v;
    auto find = [&](Vertex x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    std::size_t components = n;
    std::vector<Edge> edges;
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      if (!((mask >> k) & 1)) continue;
      edges.emplace_back(pairs[k].first, pairs[k].second);
      const Vertex a = find(pairs[k].first), b = find(pairs[k].second);
      if (a != b) {
        parent[a] = b;
        --components;
      }
    }
    if (components == 1) out.push_back(Graph::from_edges(names, std::move(edges)));
  }
  return out;
}

Graph random_tree(std::size_t n, std::uint64_t seed) {
  if (n < 2) throw Error(ErrorKind::Precondition, "random_tree needs n >= 2");
  std::mt19937_64 rng(seed);
  std::vector<std::size_t> seq(n - 2);
  for (auto& x : seq) x = bounded(rng, n);
  return prufer_decode(seq, n);
}

Graph random_connected_graph(std::size_t n, std::uint64_t seed, double extra_edge_probability) {
  if (n == 1) return path_graph(1);
  const Graph tree = random_tree(n, seed);
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  const auto threshold = static_cast<std::uint64_t>(
      extra_edge_probability * static_cast<double>(std::numeric_limits<std::uint64_t>::max()));
  EdgePairs edges;
  for (const Edge& e : tree.edges()) edges.emplace_back(e.u, e.v);
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) {
      const bool draw = rng() < threshold;
      if (draw && !tree.has_edge(i, j)) edges.emplace_back(i, j);
    }
  }
  return Graph::from_index_edges(n, edges);
}

std::vector<FamilyMember> gen_hamiltonian_2block_family(const FamilyParams& params) {
  if (params.max_vertices < 1 || params.max_vertices > 14) {
    throw Error(ErrorKind::Precondition, "family max_vertices must lie in 1..14");
  }
  for (std::size_t s : params.cycle_sizes) {
    if (s < 3) throw Error(ErrorKind::Precondition, "cycle sizes must be at least 3");
  }
  for (std::size_t s : params.clique_sizes) {
    if (s < 3) throw Error(ErrorKind::Precondition, "clique sizes must be at least 3");
  }

  struct Gadget {
    char kind;  // 'C' cycle, 'K' clique
    std::size_t size;
  };
  std::vector<Gadget> gadgets;
  for (std::size_t s : params.cycle_sizes) gadgets.push_back({'C', s});
  for (std::size_t s : params.clique_sizes) {
    if (s > 3) gadgets.push_back({'K', s});  // K3 is C3
  }

  std::vector<FamilyMember> out;
  std::unordered_set<std::string> seen;
  auto emit = [&](Graph g, std::string tag) {
    std::string key = canonical_key(g);
    if (seen.insert(key).second) out.push_back({std::move(g), std::move(tag), std::move(key)});
  };

  for (std::size_t t = 1; t <= params.max_vertices; ++t) {
    std::size_t index = 0;
    for (const Graph& tree : enumerate_free_trees(t)) {
      const std::string base = "tree" + std::to_string(t) + "#" + std::to_string(index++);
      if (params.include_trees || params.trees_only) emit(tree, base);
      if (params.trees_only) continue;

      // Depth-first over vertices: each vertex gets no gadget or one gadget,
      // subject to the vertex budget.
      std::vector<std::pair<Vertex, std::size_t>> chosen;
      std::function<void(Vertex, std::size_t)> assign = [&](Vertex v, std::size_t size) {
        if (v == t) {
          if (chosen.empty()) return;
          std::vector<Edge> edges(tree.edges().begin(), tree.edges().end());
          Vertex next = static_cast<Vertex>(t);
          std::string tag = base;
          for (auto [at, gi] : chosen) {
            const Gadget& gd = gadgets[gi];
            std::vector<Vertex> ring{at};
            for (std::size_t i = 1; i < gd.size; ++i) ring.push_back(next++);
            if (gd.kind == 'C') {
              for (std::size_t i = 0; i < ring.size(); ++i) edges.emplace_back(ring[i], ring[(i + 1) % ring.size()]);
            } else {
              for (std::size_t i = 0; i < ring.size(); ++i) {
                for (std::size_t j = i + 1; j < ring.size(); ++j) edges.emplace_back(ring[i], ring[j]);
              }
            }
            tag += "+" + std::string(1, gd.kind) + std::to_string(gd.size) + "@" + std::to_string(at);
          }
          std::vector<std::string> names;
          for (Vertex i = 0; i < next; ++i) names.push_back(std::to_string(i));
          emit(Graph::from_edges(std::move(names), std::move(edges)), std::move(tag));
          return;
        }
        assign(v + 1, size);
        for (std::size_t gi = 0; gi < gadgets.size(); ++gi) {
          const std::size_t extra = gadgets[gi].size - 1;
          if (size + extra > params.max_vertices) continue;
          chosen.emplace_back(v, gi);
          assign(v + 1, size + extra);
          chosen.pop_back();
        }
      };
      assign(0, t);
    }
  }
  return out;
}

}  // namespace hpidx
