#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include <json.hpp>

#include "hpidx/generators.hpp"
#include "hpidx/oracle.hpp"

namespace hpidx {

/// Output of a verification campaign or explorer run.
///
/// body() is a pure function of the parameters and the instances searched:
/// it holds no timing, so reruns with the same seed and parameters produce
/// identical bytes. Wall-clock time is reported beside the body.
struct CampaignReport {
  std::string campaign;
  nlohmann::json parameters = nlohmann::json::object();
  std::map<std::string, std::size_t> counts;  // per verdict
  std::size_t instances = 0;
  nlohmann::json witnesses = nlohmann::json::array();
  nlohmann::json capped = nlohmann::json::array();  // instances whose oracle was capped
  std::optional<std::uint64_t> seed;
  double wall_clock_seconds = 0.0;

  std::size_t count(const std::string& verdict) const;
  nlohmann::json body() const;
  /// {"body": body(), "wall_clock_seconds": ...}
  nlohmann::json to_json() const;
};

struct CampaignOptions {
  SearchBudget budget = deterministic_budget();
  std::size_t jobs = 1;

  /// Node-limited search with a generous time backstop, so that caps do not
  /// depend on machine speed.
  static SearchBudget deterministic_budget();
};

/// Closed formula against the oracle on every free tree with 2..max_n
/// vertices. Verdicts: agree, mismatch, capped.
CampaignReport verify_trees(std::size_t max_n, const CampaignOptions& options = {});

/// Dominating trail exists iff L(G) is traceable, over every labeled
/// connected graph on 2..max_n vertices. Verdicts: agree, violation, capped.
CampaignReport verify_xiongzong(std::size_t max_n, const CampaignOptions& options = {});

/// Dominating closed trail exists iff L(G) is hamiltonian, same family
/// restricted to graphs with at least three edges.
CampaignReport verify_hnw(std::size_t max_n, const CampaignOptions& options = {});

struct ExploreParams {
  FamilyParams family;
  std::uint64_t seed = 0;
  /// Random subset of the family of this size, drawn with the seed.
  std::optional<std::size_t> sample;
};

/// Formula (or its conjectural extension) against the oracle over the
/// hamiltonian 2-block family. Every mismatch is listed in full; records
/// are ordered by canonical key whatever the number of jobs.
CampaignReport explore_conclusion(const ExploreParams& params, const CampaignOptions& options = {});

/// Re-runs a reported witness from its own edge list. True iff the
/// recomputed record matches the stored one.
bool reverify_witness(const nlohmann::json& witness, const SearchBudget& budget);

}  // namespace hpidx
