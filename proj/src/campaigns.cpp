#include "hpidx/campaigns.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <numeric>
#include <random>
#include <thread>

#include "hpidx/errors.hpp"
#include "hpidx/graph_io.hpp"
#include "hpidx/hp_index.hpp"
#include "hpidx/line_graph.hpp"
#include "hpidx/report.hpp"

namespace hpidx {

using nlohmann::json;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Applies f to 0..count-1 on up to `jobs` threads; results keep index order.
template <class R, class F>
std::vector<R> parallel_map(std::size_t count, std::size_t jobs, F f) {
  std::vector<R> out(count);
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        out[i] = f(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  jobs = std::clamp<std::size_t>(jobs, 1, std::max<std::size_t>(count, 1));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

json names_of(const Graph& g, const std::vector<Vertex>& vs) {
  json out = json::array();
  for (Vertex v : vs) out.push_back(g.name(v));
  return out;
}

json instance_json(const Graph& g) {
  return {{"graph6", to_graph6(g)}, {"edge_list", to_edge_list(g)}};
}

// One trail-versus-line-graph check.
struct TrailCheck {
  Graph graph;
  TrailResult trail;
  std::optional<HamiltonianResult> line;  // nullopt when capped
  std::string capped_reason;
};

CampaignReport verify_trails(const std::string& name, std::size_t max_n, std::size_t min_edges, bool closed,
                             const CampaignOptions& options) {
  if (max_n < 2 || max_n > 6) throw Error(ErrorKind::Validation, "max-n must be in 2..6");
  const auto t0 = Clock::now();
  std::vector<Graph> graphs;
  json by_size = json::object();
  for (std::size_t n = 2; n <= max_n; ++n) {
    std::size_t kept = 0;
    for (Graph& g : enumerate_connected_graphs(n)) {
      if (g.edge_count() < min_edges) continue;
      graphs.push_back(std::move(g));
      ++kept;
    }
    by_size[std::to_string(n)] = kept;
  }
  const auto checks = parallel_map<TrailCheck>(graphs.size(), options.jobs, [&](std::size_t i) {
    TrailCheck c{graphs[i], {}, std::nullopt, {}};
    c.trail = closed ? has_dominating_closed_trail(c.graph, options.budget)
                     : has_dominating_trail(c.graph, options.budget);
    const Graph line = line_graph(c.graph).graph;
    try {
      c.line = closed ? has_hamiltonian_cycle(line, options.budget) : has_hamiltonian_path(line, options.budget);
    } catch (const Error& e) {
      if (!e.is_cap()) throw;
      c.capped_reason = e.what();
    }
    return c;
  });

  CampaignReport report;
  report.campaign = name;
  report.parameters = {{"max_n", max_n},
                       {"min_edges", min_edges},
                       {"instances_by_size", by_size},
                       {"budget", budget_json(options.budget)}};
  report.counts = {{"agree", 0}, {"violation", 0}, {"capped", 0}};
  report.counts["positive"] = 0;
  for (const TrailCheck& c : checks) {
    ++report.instances;
    if (!c.line) {
      ++report.counts["capped"];
      json entry = instance_json(c.graph);
      entry["reason"] = c.capped_reason;
      report.capped.push_back(std::move(entry));
      continue;
    }
    if (c.trail.found) ++report.counts["positive"];
    if (c.trail.found == c.line->found) {
      ++report.counts["agree"];
      continue;
    }
    ++report.counts["violation"];
    json w = instance_json(c.graph);
    w["trail_found"] = c.trail.found;
    w["trail"] = names_of(c.graph, c.trail.trail);
    w["line_graph_positive"] = c.line->found;
    report.witnesses.push_back(std::move(w));
  }
  report.wall_clock_seconds = seconds_since(t0);
  return report;
}

std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t n) {
  const std::uint64_t threshold = (0 - n) % n;
  while (true) {
    const std::uint64_t r = rng();
    if (r >= threshold) return r % n;
  }
}

void tally(CampaignReport& report, const ExplorerRecord& r) {
  ++report.instances;
  ++report.counts[to_string(r.verdict)];
  if (r.verdict == RecordVerdict::Mismatch) {
    report.witnesses.push_back(record_json(r));
  } else if (r.verdict == RecordVerdict::Capped) {
    report.capped.push_back({{"key", r.graph_key},
                             {"tag", r.family_tag},
                             {"graph6", to_graph6(r.graph)},
                             {"formula_value", r.formula.value},
                             {"reason", r.oracle.capped_reason}});
  }
}

}  // namespace

std::size_t CampaignReport::count(const std::string& verdict) const {
  const auto it = counts.find(verdict);
  return it == counts.end() ? 0 : it->second;
}

json CampaignReport::body() const {
  json c = json::object();
  for (const auto& [k, v] : counts) c[k] = v;
  return {{"campaign", campaign},
          {"tool_version", version()},
          {"parameters", parameters},
          {"seed", seed ? json(*seed) : json(nullptr)},
          {"instances", instances},
          {"counts", c},
          {"witnesses", witnesses},
          {"capped", capped}};
}

json CampaignReport::to_json() const { return {{"body", body()}, {"wall_clock_seconds", wall_clock_seconds}}; }

SearchBudget CampaignOptions::deterministic_budget() {
  SearchBudget b;
  b.node_limit = 2'000'000;
  b.time_limit = std::chrono::minutes(10);
  return b;
}

CampaignReport verify_trees(std::size_t max_n, const CampaignOptions& options) {
  if (max_n < 1 || max_n > 14) throw Error(ErrorKind::Validation, "max-n must be in 1..14");
  const auto t0 = Clock::now();
  std::vector<Graph> trees;
  json by_size = json::object();
  for (std::size_t n = 1; n <= max_n; ++n) {
    auto batch = enumerate_free_trees(n);
    by_size[std::to_string(n)] = batch.size();
    for (Graph& t : batch) trees.push_back(std::move(t));
  }
  const auto records = parallel_map<ExplorerRecord>(trees.size(), options.jobs, [&](std::size_t i) {
    return compare_formula_oracle(trees[i], options.budget, "tree" + std::to_string(trees[i].vertex_count()));
  });
  CampaignReport report;
  report.campaign = "verify-trees";
  report.parameters = {{"max_n", max_n}, {"instances_by_size", by_size}, {"budget", budget_json(options.budget)}};
  report.counts = {{"agree", 0}, {"mismatch", 0}, {"capped", 0}};
  for (const auto& r : records) tally(report, r);
  report.wall_clock_seconds = seconds_since(t0);
  return report;
}

CampaignReport verify_xiongzong(std::size_t max_n, const CampaignOptions& options) {
  return verify_trails("verify-xiongzong", max_n, 1, false, options);
}

CampaignReport verify_hnw(std::size_t max_n, const CampaignOptions& options) {
  return verify_trails("verify-hnw", max_n, 3, true, options);
}

CampaignReport explore_conclusion(const ExploreParams& params, const CampaignOptions& options) {
  const auto t0 = Clock::now();
  std::vector<FamilyMember> family = gen_hamiltonian_2block_family(params.family);
  const std::size_t family_size = family.size();
  if (params.sample && *params.sample < family.size()) {
    std::mt19937_64 rng(params.seed);
    for (std::size_t i = 0; i < *params.sample; ++i) {
      const std::size_t j = i + bounded(rng, family.size() - i);
      std::swap(family[i], family[j]);
    }
    family.resize(*params.sample);
  }
  std::sort(family.begin(), family.end(), [](const FamilyMember& a, const FamilyMember& b) {
    return std::tie(a.key, a.tag) < std::tie(b.key, b.tag);
  });
  const auto records = parallel_map<ExplorerRecord>(family.size(), options.jobs, [&](std::size_t i) {
    return compare_formula_oracle(family[i].graph, options.budget, family[i].tag);
  });

  CampaignReport report;
  report.campaign = "explore-conclusion";
  report.seed = params.seed;
  report.parameters = {{"max_vertices", params.family.max_vertices},
                       {"cycle_sizes", params.family.cycle_sizes},
                       {"clique_sizes", params.family.clique_sizes},
                       {"include_trees", params.family.include_trees},
                       {"trees_only", params.family.trees_only},
                       {"sample", params.sample ? json(*params.sample) : json(nullptr)},
                       {"family_size", family_size},
                       {"budget", budget_json(options.budget)}};
  report.counts = {{"agree", 0}, {"mismatch", 0}, {"capped", 0}};
  for (const auto& r : records) tally(report, r);
  report.wall_clock_seconds = seconds_since(t0);
  return report;
}

bool reverify_witness(const json& witness, const SearchBudget& budget) {
  const Graph g = from_edge_list(witness.at("edge_list").get<std::string>());
  const ExplorerRecord r = compare_formula_oracle(g, budget, witness.value("tag", "witness"));
  const json& oracle_value = witness.at("oracle_value");
  const bool oracle_matches = r.oracle.value ? oracle_value.is_number() && oracle_value.get<std::size_t>() == *r.oracle.value
                                             : oracle_value == "capped";
  return r.formula.value == witness.at("formula_value").get<std::size_t>() && oracle_matches &&
         to_string(r.verdict) == witness.at("verdict").get<std::string>() &&
         r.graph_key == witness.at("key").get<std::string>();
}

}  // namespace hpidx
