#include "hpidx/branches.hpp"

#include <algorithm>
#include <set>

#include "hpidx/errors.hpp"
#include "hpidx/graph_io.hpp"

namespace hpidx {
namespace {

void require_tree(const Graph& t) {
  if (!is_tree(t)) throw Error(ErrorKind::Precondition, "input is not a tree");
}

void require_non_path_tree(const Graph& t) {
  require_tree(t);
  if (is_path(t)) throw Error(ErrorKind::Precondition, "input is a path; it has no endpath set");
}

std::vector<std::string> name_sequence(const Graph& g, const std::vector<Vertex>& vs) {
  std::vector<std::string> out;
  out.reserve(vs.size());
  for (Vertex v : vs) out.push_back(g.name(v));
  return out;
}

}  // namespace

std::vector<Branch> branches(const Graph& g) {
  if (!is_connected(g)) throw Error(ErrorKind::NotConnected, "graph is not connected");
  std::vector<Branch> out;
  if (g.edge_count() == 0) return out;

  std::vector<char> bridge(g.edge_count(), 0);
  for (std::size_t e : blocks_and_cuts(g).bridges) bridge[e] = 1;

  std::set<std::vector<std::size_t>> seen;
  for (Vertex start = 0; start < g.vertex_count(); ++start) {
    if (g.degree(start) == 2) continue;
    for (Vertex first : g.neighbors(start)) {
      Branch b;
      b.vertices = {start, first};
      Vertex prev = start, cur = first;
      while (g.degree(cur) == 2) {
        const auto nbrs = g.neighbors(cur);
        const Vertex next = nbrs[0] == prev ? nbrs[1] : nbrs[0];
        b.vertices.push_back(next);
        prev = cur;
        cur = next;
      }
      if (cur == start) continue;  // closed walk through degree-2 vertices
      for (std::size_t i = 0; i + 1 < b.vertices.size(); ++i) {
        b.edges.push_back(*g.edge_index(b.vertices[i], b.vertices[i + 1]));
      }
      std::sort(b.edges.begin(), b.edges.end());
      if (!seen.insert(b.edges).second) continue;
      if (g.name(b.vertices.back()) < g.name(b.vertices.front())) {
        std::reverse(b.vertices.begin(), b.vertices.end());
      }
      b.in_cb = std::all_of(b.edges.begin(), b.edges.end(), [&](std::size_t e) { return bridge[e] != 0; });
      b.in_cb1 = b.in_cb && (g.degree(b.front()) == 1 || g.degree(b.back()) == 1);
      out.push_back(std::move(b));
    }
  }
  std::sort(out.begin(), out.end(), [&](const Branch& a, const Branch& b) {
    return name_sequence(g, a.vertices) < name_sequence(g, b.vertices);
  });
  return out;
}

std::vector<Branch> cb_branches(const Graph& g) {
  auto all = branches(g);
  std::erase_if(all, [](const Branch& b) { return !b.in_cb; });
  return all;
}

std::size_t k_value(const Branch& b) {
  if (!b.in_cb) throw Error(ErrorKind::KUndefined, "k is defined only for branches whose edges are all bridges");
  return b.in_cb1 ? b.edge_count() : b.edge_count() + 1;
}

bool is_caterpillar(const Graph& t) {
  require_tree(t);
  std::vector<Vertex> spine;
  for (Vertex v = 0; v < t.vertex_count(); ++v) {
    if (t.degree(v) >= 2) spine.push_back(v);
  }
  if (spine.size() <= 1) return true;
  return is_path(induced_subgraph(t, spine));
}

bool leaf_pair_less(const Graph& g, std::pair<Vertex, Vertex> a, std::pair<Vertex, Vertex> b) {
  const auto& a1 = g.name(a.first);
  const auto& b1 = g.name(b.first);
  if (a1 != b1) return a1 < b1;
  return g.name(a.second) < g.name(b.second);
}

std::vector<Endpath> endpaths(const Graph& t) {
  require_non_path_tree(t);
  std::vector<std::vector<std::size_t>> edge_sets;
  for (const Branch& b : branches(t)) edge_sets.push_back(b.edges);
  return endpaths_with(t, edge_sets);
}

std::vector<Endpath> endpaths_with(const Graph& t,
                                   const std::vector<std::vector<std::size_t>>& edge_sets) {
  require_tree(t);
  std::vector<Vertex> leaves;
  for (Vertex v = 0; v < t.vertex_count(); ++v) {
    if (t.degree(v) == 1) leaves.push_back(v);
  }
  std::sort(leaves.begin(), leaves.end(),
            [&](Vertex a, Vertex b) { return t.name(a) < t.name(b); });

  std::vector<Endpath> out;
  const auto n = t.vertex_count();
  for (std::size_t i = 0; i < leaves.size(); ++i) {
    // parent pointers of the tree rooted at leaves[i]
    std::vector<Vertex> parent(n, static_cast<Vertex>(n));
    std::vector<Vertex> stack{leaves[i]};
    parent[leaves[i]] = leaves[i];
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : t.neighbors(v)) {
        if (parent[w] == n) {
          parent[w] = v;
          stack.push_back(w);
        }
      }
    }
    for (std::size_t j = i + 1; j < leaves.size(); ++j) {
      Endpath p;
      p.leaves = {leaves[i], leaves[j]};
      for (Vertex v = leaves[j]; v != leaves[i]; v = parent[v]) p.vertices.push_back(v);
      p.vertices.push_back(leaves[i]);
      std::reverse(p.vertices.begin(), p.vertices.end());
      std::vector<std::size_t> path_edges;
      for (std::size_t k = 0; k + 1 < p.vertices.size(); ++k) {
        path_edges.push_back(*t.edge_index(p.vertices[k], p.vertices[k + 1]));
      }
      std::sort(path_edges.begin(), path_edges.end());
      for (std::size_t b = 0; b < edge_sets.size(); ++b) {
        if (std::includes(path_edges.begin(), path_edges.end(), edge_sets[b].begin(), edge_sets[b].end())) {
          p.contained.push_back(b);
        }
      }
      out.push_back(std::move(p));
    }
  }
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> maximal_pairs(const std::vector<Branch>& bs) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  std::size_t best = 0;
  for (std::size_t i = 0; i < bs.size(); ++i) {
    if (!bs[i].in_cb) continue;
    for (std::size_t j = i + 1; j < bs.size(); ++j) {
      if (!bs[j].in_cb) continue;
      const std::size_t sum = k_value(bs[i]) + k_value(bs[j]);
      if (sum > best) {
        best = sum;
        out.clear();
      }
      if (sum == best) out.emplace_back(i, j);
    }
  }
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> maximal_pairs(const Graph& t) {
  require_non_path_tree(t);
  return maximal_pairs(branches(t));
}

std::vector<CandidateEndpath> candidate_endpaths(const Graph& t) {
  require_non_path_tree(t);
  const auto pairs = maximal_pairs(branches(t));
  std::vector<CandidateEndpath> out;
  for (auto& p : endpaths(t)) {
    CandidateEndpath c;
    for (const auto& pair : pairs) {
      const bool has_first = std::binary_search(p.contained.begin(), p.contained.end(), pair.first);
      const bool has_second = std::binary_search(p.contained.begin(), p.contained.end(), pair.second);
      if (has_first && has_second) c.covers.push_back(pair);
    }
    if (!c.covers.empty()) {
      c.path = std::move(p);
      out.push_back(std::move(c));
    }
  }
  if (out.empty()) {
    throw Error(ErrorKind::Unreachable,
                "no endpath contains a maximal branch pair; witness tree:\n" + to_edge_list(t));
  }
  return out;
}

}  // namespace hpidx
