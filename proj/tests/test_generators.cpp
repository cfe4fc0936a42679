#include <doctest.h>

#include <map>
#include <set>

#include "hpidx/canonical.hpp"
#include "hpidx/errors.hpp"
#include "hpidx/generators.hpp"
#include "hpidx/graph_io.hpp"
#include "hpidx/hp_index.hpp"
#include "support.hpp"

using namespace hpidx;

TEST_CASE("free tree counts against Prüfer enumeration") {
  for (int n = 3; n <= 9; ++n) {
    std::set<std::string> codes, keys;
    ref::for_each_labeled_tree(n, [&](const ref::Mat& t) {
      codes.insert(ref::tree_code(t));
      if (n <= 7) keys.insert(canonical_key(ref::to_graph(t)));
    });
    const auto trees = enumerate_free_trees(static_cast<std::size_t>(n));
    INFO("n = " << n);
    CHECK(trees.size() == codes.size());
    if (n <= 7) CHECK(keys.size() == codes.size());
    // One tree per class: the generated codes are distinct and match.
    std::set<std::string> mine;
    for (const Graph& t : trees) {
      CHECK(is_tree(t));
      CHECK(t.vertex_count() == static_cast<std::size_t>(n));
      mine.insert(ref::tree_code(ref::from(t)));
    }
    CHECK(mine == codes);
  }
  CHECK(enumerate_free_trees(4).size() == 2);
  CHECK(enumerate_free_trees(7).size() == 11);
}

TEST_CASE("free tree classes are distinct up to fourteen vertices") {
  // Too many labeled trees past 9 for Prüfer; check distinctness plus the
  // published counts of unlabeled trees.
  const std::map<std::size_t, std::size_t> known{{10, 106}, {11, 235}, {12, 551}, {13, 1301}, {14, 3159}};
  for (std::size_t n = 10; n <= 14; ++n) {
    std::set<std::string> codes;
    std::size_t count = 0;
    for_each_free_tree(n, [&](const Graph& t) {
      ++count;
      codes.insert(ref::tree_code(ref::from(t)));
    });
    CHECK(codes.size() == count);
    CHECK(count == known.at(n));
  }
  CHECK(enumerate_free_trees(1).size() == 1);
  CHECK(enumerate_free_trees(2).size() == 1);
  CHECK_THROWS_AS(enumerate_free_trees(0), Error);
  CHECK_THROWS_AS(enumerate_free_trees(15), Error);
}

TEST_CASE("connected labeled graph counts") {
  for (std::size_t n = 2; n <= 5; ++n) {
    // Brute filter of every labeled graph.
    const int pairs = static_cast<int>(n * (n - 1) / 2);
    std::size_t expected = 0;
    for (std::uint32_t mask = 0; mask < (1u << pairs); ++mask) {
      ref::Mat m(static_cast<int>(n));
      int bit = 0;
      for (int a = 0; a < static_cast<int>(n); ++a) {
        for (int b = a + 1; b < static_cast<int>(n); ++b, ++bit) {
          if (mask >> bit & 1) m.add(a, b);
        }
      }
      expected += ref::connected(m);
    }
    const auto graphs = enumerate_connected_graphs(n);
    CHECK(graphs.size() == expected);
    std::set<std::vector<Edge>> distinct;
    for (const Graph& g : graphs) {
      CHECK(is_connected(g));
      CHECK(g.name(0) == "1");
      distinct.insert(g.edges());
    }
    CHECK(distinct.size() == graphs.size());
  }
  CHECK(enumerate_connected_graphs(2).size() == 1);
  CHECK(enumerate_connected_graphs(3).size() == 4);
  CHECK(enumerate_connected_graphs(4).size() == 38);
  CHECK(enumerate_connected_graphs(5).size() == 728);
  CHECK_THROWS_AS(enumerate_connected_graphs(1), Error);
  CHECK_THROWS_AS(enumerate_connected_graphs(7), Error);
}

TEST_CASE("random trees") {
  CHECK(random_tree(5, 1).edges() == random_tree(5, 1).edges());
  CHECK(random_tree(2, 12345).edge_count() == 1);
  for (std::uint64_t seed = 1; seed <= 1000; ++seed) CHECK(is_tree(random_tree(9, seed)));
  // Pinned output guards the documented generator contract.
  CHECK(to_edge_list(random_tree(5, 1)) == "0 2\n0 4\n1 3\n2 3\n");

  // Uniformity: all 16 labeled trees on 4 vertices appear with similar frequency.
  std::map<std::vector<Edge>, int> seen;
  for (std::uint64_t seed = 0; seed < 16000; ++seed) ++seen[random_tree(4, seed).edges()];
  CHECK(seen.size() == 16);
  for (const auto& [edges, count] : seen) {
    CHECK(count > 800);
    CHECK(count < 1200);
  }
}

TEST_CASE("random connected graphs") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const Graph g = random_connected_graph(10, seed, 0.2);
    CHECK(is_connected(g));
    CHECK(g.edges() == random_connected_graph(10, seed, 0.2).edges());
  }
}

TEST_CASE("named families") {
  CHECK(spider({2, 2, 2}).vertex_count() == 7);
  CHECK(double_spider({3, 3}, 1, {3, 3}).vertex_count() == 14);
  CHECK(double_spider({1}, 3, {1, 1}).edge_count() == 6);
  CHECK(complete_graph(5).edge_count() == 10);
  CHECK(star_graph(4).max_degree() == 4);
}

TEST_CASE("hamiltonian 2-block family") {
  SUBCASE("small members") {
    const auto fam = gen_hamiltonian_2block_family({6, {3}, {}, true, false});
    // Triangle with a two-edge tail: P3 with a triangle glued at an end.
    const std::string tail = canonical_key(from_edge_list("t1 t2\nt2 t3\nt3 t1\nt3 a\na b\n"));
    bool has_tail = false;
    for (const auto& m : fam) has_tail = has_tail || m.key == tail;
    CHECK(has_tail);
  }
  SUBCASE("spider with a triangle at a leaf is in the family") {
    const auto fam = gen_hamiltonian_2block_family({9, {3}, {}, false, false});
    const std::string key = canonical_key(from_edge_list("c a1\na1 a2\nc b1\nb1 b2\nc d1\nd1 d2\nd2 x\nx y\ny d2\n"));
    bool found = false;
    for (const auto& m : fam) found = found || m.key == key;
    CHECK(found);
  }
  SUBCASE("deduplicated and in the evaluator's domain") {
    const auto fam = gen_hamiltonian_2block_family({9, {3, 4, 5}, {4}, true, false});
    std::set<std::string> keys;
    for (const auto& m : fam) {
      CHECK(keys.insert(canonical_key(m.graph)).second);
      CHECK(m.graph.vertex_count() <= 9);
      CHECK(is_connected(m.graph));
      CHECK_NOTHROW(hp_blockchain_conjecture(m.graph));
      CHECK(canonical_key(from_edge_list(to_edge_list(m.graph))) == canonical_key(m.graph));
    }
    CHECK(fam.size() > 100);
  }
  SUBCASE("trees only") {
    const auto fam = gen_hamiltonian_2block_family({8, {3}, {}, true, true});
    std::size_t trees = 0;
    for (std::size_t n = 1; n <= 8; ++n) trees += enumerate_free_trees(n).size();
    CHECK(fam.size() == trees);
    for (const auto& m : fam) CHECK(is_tree(m.graph));
  }
  CHECK_THROWS_AS(gen_hamiltonian_2block_family({15, {3}, {}, true, false}), Error);
  CHECK_THROWS_AS(gen_hamiltonian_2block_family({8, {2}, {}, true, false}), Error);
}
