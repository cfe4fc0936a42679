#include <doctest.h>

#include <algorithm>
#include <set>

#include "hpidx/campaigns.hpp"
#include "hpidx/canonical.hpp"
#include "hpidx/errors.hpp"
#include "hpidx/generators.hpp"
#include "hpidx/graph_io.hpp"
#include "hpidx/report.hpp"
#include "schema_check.hpp"
#include "support.hpp"

using namespace hpidx;
using nlohmann::json;

namespace {

// Labeled connected graphs on n vertices, straight from the edge masks.
std::vector<ref::Mat> connected_labeled(int n) {
  std::vector<ref::Mat> out;
  const int pairs = n * (n - 1) / 2;
  for (std::uint32_t mask = 0; mask < (1u << pairs); ++mask) {
    ref::Mat m(n);
    int bit = 0;
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b, ++bit) {
        if (mask >> bit & 1) m.add(a, b);
      }
    }
    if (ref::connected(m)) out.push_back(m);
  }
  return out;
}

void require_schema(const json& report, const std::string& stem) {
  const auto outcome = schema_check::validate(report, stem);
  if (outcome == schema_check::Outcome::Unavailable) {
    MESSAGE("jsonschema unavailable, schema check skipped");
    return;
  }
  CHECK(outcome == schema_check::Outcome::Valid);
}

}  // namespace

TEST_CASE("tree campaign") {
  const auto r = verify_trees(8);
  CHECK(r.instances == 48);
  CHECK(r.count("agree") == 48);
  CHECK(r.count("mismatch") == 0);
  CHECK(r.body()["parameters"]["instances_by_size"]["8"] == 23);
  CHECK(r.body()["seed"].is_null());
  require_schema(r.to_json(), "verify_trees");
  CHECK_THROWS_AS(verify_trees(0), Error);
  CHECK_THROWS_AS(verify_trees(15), Error);
}

TEST_CASE("trail campaigns against the brute characterizations") {
  SUBCASE("open trails") {
    const auto r = verify_xiongzong(4);
    std::size_t instances = 0, positive = 0;
    for (int n = 2; n <= 4; ++n) {
      for (const auto& m : connected_labeled(n)) {
        ++instances;
        const bool trail = ref::dominating_trail(m, false);
        CHECK(trail == ref::traceable(ref::line(m)));
        positive += trail;
      }
    }
    CHECK(r.instances == instances);
    CHECK(r.body()["parameters"]["instances_by_size"]["4"] == 38);
    CHECK(r.count("positive") == positive);
    CHECK(r.count("violation") == 0);
    CHECK(r.count("capped") == 0);
    require_schema(r.to_json(), "verify_xiongzong");
  }
  SUBCASE("closed trails") {
    const auto r = verify_hnw(5);
    std::size_t instances = 0, positive = 0;
    for (int n = 2; n <= 5; ++n) {
      for (const auto& m : connected_labeled(n)) {
        if (m.edges.size() < 3) continue;
        ++instances;
        const bool trail = ref::dominating_trail(m, true);
        CHECK(trail == ref::hamiltonian(ref::line(m)));
        positive += trail;
      }
    }
    CHECK(r.instances == instances);
    CHECK(r.count("positive") == positive);
    CHECK(r.count("positive") < r.instances);
    CHECK(r.count("violation") == 0);
    require_schema(r.to_json(), "verify_hnw");
  }
  CHECK_THROWS_AS(verify_xiongzong(1), Error);
  CHECK_THROWS_AS(verify_hnw(7), Error);
}

TEST_CASE("explorer on trees finds nothing") {
  ExploreParams p;
  p.family = {9, {3}, {}, true, true};
  const auto r = explore_conclusion(p);
  CHECK(r.instances > 0);
  CHECK(r.count("mismatch") == 0);
  CHECK(r.witnesses.empty());
}

TEST_CASE("explorer witnesses are real") {
  ExploreParams p;
  p.family = {7, {3, 4}, {}, true, false};
  const auto r = explore_conclusion(p);
  CHECK(r.count("agree") + r.count("mismatch") + r.count("capped") == r.instances);
  REQUIRE(r.count("mismatch") > 0);
  CHECK(r.witnesses.size() == r.count("mismatch"));
  const SearchBudget budget = CampaignOptions::deterministic_budget();
  std::vector<std::string> keys;
  for (const auto& w : r.witnesses) {
    CHECK(reverify_witness(w, budget));
    // The oracle value in the record is the true index by plain iteration.
    const Graph g = from_edge_list(w["edge_list"].get<std::string>());
    CHECK(ref::hp_index(ref::from(g), 4) == w["oracle_value"].get<int>());
    CHECK(w["formula_value"] != w["oracle_value"]);
    CHECK(from_graph6(w["graph6"].get<std::string>()).edge_count() == g.edge_count());
    keys.push_back(w["key"].get<std::string>());
  }
  // Witnesses come out in key order, one per class.
  CHECK(std::is_sorted(keys.begin(), keys.end()));
  CHECK(std::adjacent_find(keys.begin(), keys.end()) == keys.end());

  json tampered = r.witnesses[0];
  tampered["oracle_value"] = tampered["oracle_value"].get<int>() + 1;
  CHECK_FALSE(reverify_witness(tampered, budget));

  require_schema(r.to_json(), "explore_small");
  json broken = r.to_json();
  broken["body"]["witnesses"][0].erase("verdict");
  broken["body"]["unexpected"] = 1;
  CHECK(schema_check::validate(broken, "explore_broken") != schema_check::Outcome::Valid);
}

TEST_CASE("explorer output is deterministic") {
  ExploreParams p;
  p.family = {8, {3, 4}, {4}, true, false};
  CampaignOptions one, three;
  three.jobs = 3;
  const auto a = explore_conclusion(p, one);
  const auto b = explore_conclusion(p, one);
  const auto c = explore_conclusion(p, three);
  CHECK(a.body().dump() == b.body().dump());
  CHECK(a.body().dump() == c.body().dump());
  CHECK(a.body()["seed"] == 0);
}

TEST_CASE("explorer sampling") {
  ExploreParams p;
  p.family = {8, {3}, {}, true, false};
  p.sample = 20;
  p.seed = 7;
  const auto a = explore_conclusion(p);
  const auto b = explore_conclusion(p);
  CHECK(a.instances == 20);
  CHECK(a.body().dump() == b.body().dump());
  p.seed = 8;
  const auto c = explore_conclusion(p);
  CHECK(c.instances == 20);
  CHECK(c.body()["seed"] == 8);
  // Oversized samples take the whole family.
  p.sample = 100000;
  const auto d = explore_conclusion(p);
  p.sample.reset();
  CHECK(d.instances == explore_conclusion(p).instances);
}
