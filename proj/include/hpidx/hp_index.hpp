#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hpidx/branches.hpp"
#include "hpidx/graph.hpp"
#include "hpidx/oracle.hpp"

namespace hpidx {

struct PairValue {
  std::pair<std::size_t, std::size_t> pair;  // indices into FormulaResult::branches
  std::optional<std::size_t> value;          // nullopt when no endpath covers the pair
};

/// Value of the min-max formula with the structure that produced it.
///
/// value = min over candidate endpaths P of max{ k(b) : b in CB \ B_P },
/// where an empty inner maximum is 0.
struct FormulaResult {
  std::size_t value = 0;
  bool conjectural = false;
  /// Graph the endpaths live in: the tree itself, or the reduced tree for
  /// the conjectural evaluator.
  Graph endpath_host;
  std::vector<Branch> branches;                // B(G) of the input graph
  std::optional<Endpath> chosen_endpath;       // vertices of endpath_host
  std::optional<std::size_t> off_path_branch;  // index into branches
  std::vector<PairValue> per_pair;
  /// Some maximal pair is covered by no endpath.
  bool pairs_differ_in_coverage = false;
};

/// Hamiltonian path index of a tree by the closed formula: 0 for paths,
/// otherwise the min-max over the candidate endpaths. Ties for the chosen
/// endpath go to the lexicographically least leaf-name pair.
/// Throws Error(Precondition) for non-trees.
FormulaResult hp_tree(const Graph& t);

/// The tree formula transplanted to connected graphs whose 2-blocks are all
/// hamiltonian. Branch classes and k-values come from g; endpaths are taken
/// in the reduced tree obtained by contracting every 2-block to a vertex.
/// The extension is unproven and is what the explorer tests. Trees are delegated to
/// hp_tree. Throws Error(OutOfFamily) if some 2-block is not hamiltonian.
FormulaResult hp_blockchain_conjecture(const Graph& g, const SearchBudget& budget = {});

/// The reduced tree: 2-blocks contracted, bridges kept. Contracted vertices
/// are named "{a,b,c}" from their members.
Graph reduced_tree(const Graph& g);

enum class RecordVerdict { Agree, Mismatch, Capped };
const char* to_string(RecordVerdict v);

/// One formula-versus-oracle comparison.
struct ExplorerRecord {
  std::string graph_key;  // hex canonical key
  Graph graph;
  std::string family_tag;
  FormulaResult formula;
  IndexResult oracle;
  RecordVerdict verdict = RecordVerdict::Capped;
};

/// Evaluates hp_tree (trees) or hp_blockchain_conjecture (otherwise) and
/// hp_oracle. A capped oracle yields the Capped verdict, never an error.
ExplorerRecord compare_formula_oracle(const Graph& g, const SearchBudget& budget = {},
                                      std::string family_tag = "input");

}  // namespace hpidx
