#include "hpidx/hp_index.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "hpidx/canonical.hpp"
#include "hpidx/errors.hpp"
#include "hpidx/graph_io.hpp"

namespace hpidx {
namespace {

bool contains(const std::vector<std::size_t>& sorted, std::size_t x) {
  return std::binary_search(sorted.begin(), sorted.end(), x);
}

// Shared min-max evaluation. `paths` live in `host`; their containment sets
// index into `result.branches`.
void evaluate(FormulaResult& result, const std::vector<Endpath>& paths, const std::string& witness) {
  const auto& bs = result.branches;
  std::vector<std::size_t> cb;
  for (std::size_t i = 0; i < bs.size(); ++i) {
    if (bs[i].in_cb) cb.push_back(i);
  }
  const auto pairs = maximal_pairs(bs);

  // Candidate set: endpaths covering a maximal pair. With fewer than two
  // CB branches there is no pair; then every endpath containing the CB
  // branches present is a candidate.
  std::vector<std::size_t> candidates;
  std::vector<std::vector<std::size_t>> covered_pairs(paths.size());
  for (std::size_t p = 0; p < paths.size(); ++p) {
    const auto& in = paths[p].contained;
    if (!pairs.empty()) {
      for (std::size_t q = 0; q < pairs.size(); ++q) {
        if (contains(in, pairs[q].first) && contains(in, pairs[q].second)) covered_pairs[p].push_back(q);
      }
      if (!covered_pairs[p].empty()) candidates.push_back(p);
    } else if (std::all_of(cb.begin(), cb.end(), [&](std::size_t b) { return contains(in, b); })) {
      candidates.push_back(p);
    }
  }
  if (paths.empty()) return;  // no endpaths at all: value 0
  if (candidates.empty()) {
    throw Error(ErrorKind::Unreachable,
                "no endpath contains a maximal branch pair; witness:\n" + witness);
  }

  auto cost = [&](std::size_t p, std::optional<std::size_t>* arg) {
    std::size_t worst = 0;
    for (std::size_t b : cb) {
      if (contains(paths[p].contained, b)) continue;
      const std::size_t k = k_value(bs[b]);
      if (k > worst) {
        worst = k;
        if (arg) *arg = b;
      }
    }
    return worst;
  };

  std::optional<std::size_t> best;
  std::size_t best_value = 0;
  for (std::size_t p : candidates) {
    const std::size_t v = cost(p, nullptr);
    const bool better = !best || v < best_value ||
                        (v == best_value &&
                         leaf_pair_less(result.endpath_host, paths[p].leaves, paths[*best].leaves));
    if (better) {
      best = p;
      best_value = v;
    }
  }
  result.value = best_value;
  result.chosen_endpath = paths[*best];
  std::optional<std::size_t> arg;
  cost(*best, &arg);
  result.off_path_branch = arg;

  for (std::size_t q = 0; q < pairs.size(); ++q) {
    PairValue pv{pairs[q], std::nullopt};
    for (std::size_t p : candidates) {
      if (!contains(covered_pairs[p], q)) continue;
      const std::size_t v = cost(p, nullptr);
      if (!pv.value || v < *pv.value) pv.value = v;
    }
    if (!pv.value) result.pairs_differ_in_coverage = true;
    result.per_pair.push_back(pv);
  }
}

}  // namespace

FormulaResult hp_tree(const Graph& t) {
  if (!is_tree(t)) throw Error(ErrorKind::Precondition, "input is not a tree");
  FormulaResult result;
  result.endpath_host = t;
  if (is_path(t)) return result;
  result.branches = branches(t);
  evaluate(result, endpaths(t), to_edge_list(t));
  return result;
}

namespace {

struct Reduction {
  Graph tree;
  std::vector<Vertex> image;  // vertex of g -> vertex of tree
};

Reduction reduce(const Graph& g) {
  const auto bd = blocks_and_cuts(g);
  const auto n = g.vertex_count();
  std::vector<Vertex> group(n);
  std::iota(group.begin(), group.end(), Vertex{0});
  auto find = [&](Vertex x) {
    while (group[x] != x) x = group[x] = group[group[x]];
    return x;
  };
  for (std::size_t b : bd.two_blocks()) {
    const auto& verts = bd.block_vertices[b];
    for (Vertex v : verts) {
      const Vertex x = find(v), y = find(verts.front());
      if (x != y) group[std::max(x, y)] = std::min(x, y);
    }
  }
  std::map<Vertex, std::vector<std::string>> members;
  for (Vertex v = 0; v < n; ++v) members[find(v)].push_back(g.name(v));
  std::map<Vertex, std::string> label;
  for (auto& [root, names] : members) {
    std::sort(names.begin(), names.end());
    std::string name = names.front();
    if (names.size() > 1) {
      name = "{";
      for (std::size_t i = 0; i < names.size(); ++i) name += (i ? "," : "") + names[i];
      name += "}";
    }
    label[root] = name;
  }
  GraphBuilder builder;
  Reduction out;
  out.image.resize(n);
  for (Vertex v = 0; v < n; ++v) out.image[v] = builder.add_vertex(label[find(v)]);
  for (std::size_t e : bd.bridges) {
    const Edge& edge = g.edges()[e];
    builder.add_edge(out.image[edge.u], out.image[edge.v]);
  }
  out.tree = builder.build();
  return out;
}

}  // namespace

Graph reduced_tree(const Graph& g) { return reduce(g).tree; }

FormulaResult hp_blockchain_conjecture(const Graph& g, const SearchBudget& budget) {
  if (!is_connected(g)) throw Error(ErrorKind::NotConnected, "graph is not connected");
  if (is_tree(g)) return hp_tree(g);
  const auto bd = blocks_and_cuts(g);
  for (std::size_t b : bd.two_blocks()) {
    if (!has_hamiltonian_cycle(induced_subgraph(g, bd.block_vertices[b]), budget).found) {
      throw Error(ErrorKind::OutOfFamily, "a 2-block is not hamiltonian");
    }
  }

  FormulaResult result;
  result.conjectural = true;
  result.branches = branches(g);
  Reduction red = reduce(g);
  result.endpath_host = std::move(red.tree);
  const Graph& r = result.endpath_host;
  const auto& image = red.image;

  // CB branches map onto reduced-tree edges. Other branches run through a
  // 2-block and get an unmatchable edge set.
  std::vector<std::vector<std::size_t>> edge_sets;
  for (const Branch& b : result.branches) {
    std::vector<std::size_t> es;
    if (b.in_cb) {
      for (std::size_t i = 0; i + 1 < b.vertices.size(); ++i) {
        es.push_back(*r.edge_index(image[b.vertices[i]], image[b.vertices[i + 1]]));
      }
      std::sort(es.begin(), es.end());
    } else {
      es.push_back(r.edge_count());
    }
    edge_sets.push_back(std::move(es));
  }
  evaluate(result, endpaths_with(r, edge_sets), to_edge_list(g));
  return result;
}

const char* to_string(RecordVerdict v) {
  switch (v) {
    case RecordVerdict::Agree: return "agree";
    case RecordVerdict::Mismatch: return "mismatch";
    case RecordVerdict::Capped: return "capped";
  }
  return "capped";
}

ExplorerRecord compare_formula_oracle(const Graph& g, const SearchBudget& budget, std::string family_tag) {
  ExplorerRecord record;
  record.graph = g;
  record.family_tag = std::move(family_tag);
  try {
    record.graph_key = key_to_hex(canonical_key(g));
  } catch (const Error&) {
    record.graph_key = "g6:" + to_graph6(g);
  }
  record.formula = is_tree(g) ? hp_tree(g) : hp_blockchain_conjecture(g, budget);
  record.oracle = hp_oracle(g, budget);
  if (record.oracle.capped()) {
    record.verdict = RecordVerdict::Capped;
  } else {
    record.verdict = *record.oracle.value == record.formula.value ? RecordVerdict::Agree
                                                                   : RecordVerdict::Mismatch;
  }
  return record;
}

}  // namespace hpidx
