#pragma once

#include <json.hpp>

#include "hpidx/graph.hpp"
#include "hpidx/hp_index.hpp"
#include "hpidx/oracle.hpp"

namespace hpidx {

/// {"vertices": [...], "edges": [[a, b], ...]} by vertex name.
nlohmann::json graph_json(const Graph& g);

/// {"vertices", "edges", "cb", "cb1", "k"}; k is null outside CB.
nlohmann::json branch_json(const Graph& g, const Branch& b);

/// {value, endpath, off_path_branch, per_pair, conjectural, branches,
///  pairs_differ_in_coverage}. Endpath vertices are names in the endpath host.
nlohmann::json formula_json(const Graph& g, const FormulaResult& r);

/// {value: int | "capped", stages: [{n, V, E, verdict}], witness?,
///  capped_reason?, dominating_trail_check?}
nlohmann::json index_json(const IndexResult& r);

nlohmann::json blocks_json(const Graph& g, const BlockDecomposition& bd);

nlohmann::json budget_json(const SearchBudget& b);

nlohmann::json record_json(const ExplorerRecord& r);

}  // namespace hpidx

namespace hpidx {

/// Library version string.
const char* version();

}  // namespace hpidx
