#include <doctest.h>

#include <map>
#include <random>

#include "hpidx/branches.hpp"
#include "hpidx/errors.hpp"
#include "hpidx/generators.hpp"
#include "hpidx/graph_io.hpp"
#include "support.hpp"

using namespace hpidx;

namespace {

std::multiset<std::size_t> lengths(const std::vector<Branch>& bs) {
  std::multiset<std::size_t> out;
  for (const auto& b : bs) out.insert(b.edge_count());
  return out;
}

std::string leg(const Graph& g, const Branch& b) {
  std::string s;
  for (Vertex v : b.vertices) s += (s.empty() ? "" : "-") + g.name(v);
  return s;
}

// Maximal runs of edges through degree-2 vertices, grown edge by edge.
std::vector<std::set<int>> reference_branches(const ref::Mat& m) {
  std::vector<std::set<int>> out;
  std::vector<char> done(m.edges.size(), 0);
  auto edge_id = [&](int a, int b) {
    for (std::size_t i = 0; i < m.edges.size(); ++i) {
      if (m.edges[i] == std::pair{std::min(a, b), std::max(a, b)}) return static_cast<int>(i);
    }
    return -1;
  };
  for (std::size_t i = 0; i < m.edges.size(); ++i) {
    if (done[i]) continue;
    std::set<int> run{static_cast<int>(i)};
    bool closed = false;
    int ends[2] = {-1, -1};
    for (int side = 0; side < 2; ++side) {
      int prev = side ? m.edges[i].first : m.edges[i].second;
      int cur = side ? m.edges[i].second : m.edges[i].first;
      while (m.degree(cur) == 2) {
        int next = -1;
        for (int w = 0; w < m.n; ++w) {
          if (m.adj[cur][w] && w != prev) next = w;
        }
        const int e = edge_id(cur, next);
        if (run.count(e)) {
          closed = true;
          break;
        }
        run.insert(e);
        prev = cur;
        cur = next;
      }
      ends[side] = cur;
    }
    for (int e : run) done[e] = 1;
    // A run returning to its start vertex is a cycle, not a path.
    if (!closed && ends[0] != ends[1]) out.push_back(run);
  }
  return out;
}

}  // namespace

TEST_CASE("branches of stars and spiders") {
  const auto star = branches(star_graph(3));
  CHECK(star.size() == 3);
  for (const auto& b : star) {
    CHECK(b.edge_count() == 1);
    CHECK(b.in_cb1);
  }
  const auto sp = branches(spider({3, 2, 2}));
  CHECK(lengths(sp) == std::multiset<std::size_t>{2, 2, 3});
  for (const auto& b : sp) CHECK(b.in_cb1);
}

TEST_CASE("triangle with a pendant path") {
  // Each triangle edge ends at a degree-2 vertex or closes a cycle, so the
  // pendant path is the only branch.
  const Graph g = from_edge_list("t1 t2\nt2 t3\nt3 t1\nt3 a\na b\n");
  const auto bs = branches(g);
  REQUIRE(bs.size() == 1);
  CHECK(leg(g, bs[0]) == "b-a-t3");
  CHECK(bs[0].in_cb1);
  CHECK(k_value(bs[0]) == 2);
  CHECK(cb_branches(g).size() == 1);
}

TEST_CASE("cycles have no branches, paths have one") {
  CHECK(branches(cycle_graph(5)).empty());
  const auto p = branches(path_graph(5));
  REQUIRE(p.size() == 1);
  CHECK(p[0].edge_count() == 4);
  CHECK(p[0].in_cb1);
  CHECK_THROWS_AS(branches(from_edge_list("a b\nc d")), Error);
}

TEST_CASE("k-values") {
  Branch b;
  b.edges = {0, 1};
  b.in_cb = b.in_cb1 = true;
  CHECK(k_value(b) == 2);
  b.in_cb1 = false;
  CHECK(k_value(b) == 3);
  b.edges = {0};
  b.in_cb1 = true;
  CHECK(k_value(b) == 1);
  b.in_cb = b.in_cb1 = false;
  try {
    k_value(b);
    FAIL("k defined outside CB");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::KUndefined);
  }
  // Internal branch of a double spider: both ends of degree 3.
  const auto ds = branches(double_spider({1, 1}, 2, {1, 1}));
  std::size_t internal = 0;
  for (const auto& br : ds) {
    if (!br.in_cb1) {
      ++internal;
      CHECK(br.in_cb);
      CHECK(k_value(br) == 3);
    }
  }
  CHECK(internal == 1);
}

TEST_CASE("caterpillars") {
  CHECK(is_caterpillar(star_graph(3)));
  CHECK_FALSE(is_caterpillar(spider({2, 2, 2})));
  CHECK(is_caterpillar(path_graph(6)));
  CHECK(is_caterpillar(path_graph(1)));
  CHECK_THROWS_AS(is_caterpillar(cycle_graph(4)), Error);
}

TEST_CASE("endpaths") {
  SUBCASE("star") {
    const auto ps = endpaths(star_graph(3));
    CHECK(ps.size() == 3);
    for (const auto& p : ps) CHECK(p.contained.size() == 2);
  }
  SUBCASE("spider 2,2,2") {
    const auto ps = endpaths(spider({2, 2, 2}));
    CHECK(ps.size() == 3);
    for (const auto& p : ps) {
      CHECK(p.vertices.size() == 5);
      CHECK(p.contained.size() == 2);
    }
  }
  SUBCASE("caterpillar a-b-c with leaf d on b") {
    const Graph t = from_edge_list("a b\nb c\nb d\n");
    const auto bs = branches(t);
    for (const auto& p : endpaths(t)) {
      if (t.name(p.leaves.first) == "a" && t.name(p.leaves.second) == "c") {
        CHECK(p.contained.size() == 2);
        for (std::size_t i : p.contained) CHECK_FALSE(leg(t, bs[i]).find('d') != std::string::npos);
      }
    }
  }
  CHECK_THROWS_AS(endpaths(path_graph(4)), Error);
  CHECK_THROWS_AS(endpaths(cycle_graph(4)), Error);
}

TEST_CASE("maximal pairs and candidate endpaths") {
  SUBCASE("spider 3,2,2") {
    const Graph t = spider({3, 2, 2});
    const auto bs = branches(t);
    const auto pairs = maximal_pairs(t);
    CHECK(pairs.size() == 2);
    for (auto [i, j] : pairs) CHECK(k_value(bs[i]) + k_value(bs[j]) == 5);
    CHECK(candidate_endpaths(t).size() == 2);
  }
  SUBCASE("star") {
    CHECK(maximal_pairs(star_graph(3)).size() == 3);
    CHECK(candidate_endpaths(star_graph(3)).size() == 3);
  }
  SUBCASE("spider 4,1,1") {
    const Graph t = spider({4, 1, 1});
    const auto bs = branches(t);
    const auto pairs = maximal_pairs(t);
    CHECK(pairs.size() == 2);
    for (auto [i, j] : pairs) CHECK(k_value(bs[i]) + k_value(bs[j]) == 5);
  }
  SUBCASE("double spider 3,3 | 1 | 3,3") {
    // Every leg pair sums to 6; the internal branch has k = 2.
    const Graph t = double_spider({3, 3}, 1, {3, 3});
    CHECK(maximal_pairs(t).size() == 6);
    CHECK(candidate_endpaths(t).size() == 6);
  }
}

TEST_CASE("tree branches against the reference walk") {
  for (std::size_t n = 2; n <= 11; ++n) {
    for (const Graph& t : enumerate_free_trees(n)) {
      const auto bs = branches(t);
      const ref::Mat m = ref::from(t);
      std::set<std::set<int>> mine, theirs;
      for (const auto& b : bs) {
        std::set<int> s;
        // ref::from keeps the library's edge order.
        for (std::size_t e : b.edges) s.insert(static_cast<int>(e));
        mine.insert(s);
      }
      for (const auto& s : reference_branches(m)) theirs.insert(s);
      CHECK(mine == theirs);

      // Partition of E(T), all in CB.
      std::vector<int> owner(t.edge_count(), 0);
      for (const auto& b : bs) {
        CHECK(b.in_cb);
        CHECK(b.in_cb1 == (t.degree(b.front()) == 1 || t.degree(b.back()) == 1));
        for (std::size_t i = 1; i + 1 < b.vertices.size(); ++i) CHECK(t.degree(b.vertices[i]) == 2);
        CHECK(t.degree(b.front()) != 2);
        CHECK(t.degree(b.back()) != 2);
        for (std::size_t e : b.edges) ++owner[e];
      }
      CHECK(std::all_of(owner.begin(), owner.end(), [](int c) { return c == 1; }));
    }
  }
}

TEST_CASE("endpath containment against an independent path search") {
  for (std::size_t n = 4; n <= 10; ++n) {
    for (const Graph& t : enumerate_free_trees(n)) {
      if (is_path(t)) continue;
      const auto bs = branches(t);
      const ref::Mat m = ref::from(t);
      for (const auto& p : endpaths(t)) {
        // Path between the two leaves by parent pointers from a BFS.
        std::vector<int> parent(m.n, -1);
        std::vector<int> queue{static_cast<int>(p.leaves.first)};
        parent[p.leaves.first] = static_cast<int>(p.leaves.first);
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
          for (int w = 0; w < m.n; ++w) {
            if (m.adj[queue[qi]][w] && parent[w] < 0) parent[w] = queue[qi], queue.push_back(w);
          }
        }
        std::set<std::pair<Vertex, Vertex>> path_edges;
        for (int v = static_cast<int>(p.leaves.second); v != static_cast<int>(p.leaves.first); v = parent[v]) {
          path_edges.insert(std::minmax<Vertex>(v, parent[v]));
        }
        CHECK(path_edges.size() + 1 == p.vertices.size());
        std::set<std::size_t> expected;
        for (std::size_t i = 0; i < bs.size(); ++i) {
          bool inside = true;
          for (std::size_t e : bs[i].edges) {
            inside = inside && path_edges.count({t.edges()[e].u, t.edges()[e].v});
          }
          if (inside) expected.insert(i);
        }
        CHECK(std::set<std::size_t>(p.contained.begin(), p.contained.end()) == expected);
        CHECK(t.degree(p.leaves.first) == 1);
        CHECK(t.degree(p.leaves.second) == 1);
        CHECK(t.name(p.leaves.first) < t.name(p.leaves.second));
      }
    }
  }
}

TEST_CASE("every maximal pair has a containing endpath") {
  std::size_t pairs_seen = 0;
  for (std::size_t n = 4; n <= 11; ++n) {
    for (const Graph& t : enumerate_free_trees(n)) {
      if (is_path(t)) continue;
      const auto cands = candidate_endpaths(t);
      std::set<std::pair<std::size_t, std::size_t>> covered;
      for (const auto& c : cands) covered.insert(c.covers.begin(), c.covers.end());
      for (const auto& pr : maximal_pairs(t)) {
        ++pairs_seen;
        CHECK(covered.count(pr) == 1);
      }
    }
  }
  CHECK(pairs_seen > 1000);
}

TEST_CASE("branches of random graphs against the reference walk") {
  std::mt19937_64 rng(404);
  for (int i = 0; i < 500; ++i) {
    const ref::Mat m = ref::random_connected(rng, 3 + static_cast<int>(rng() % 10), 0.12);
    const Graph g = ref::to_graph(m);
    std::set<std::set<int>> mine, theirs;
    const auto bridges = ref::bridges(m);
    for (const auto& b : branches(g)) {
      std::set<int> s;
      bool all_bridges = true;
      for (std::size_t e : b.edges) {
        s.insert(static_cast<int>(e));
        all_bridges = all_bridges && bridges.count({g.edges()[e].u, g.edges()[e].v});
      }
      CHECK(b.in_cb == all_bridges);
      mine.insert(s);
    }
    // Translate reference edge ids (insertion order) into library ids.
    for (const auto& run : reference_branches(m)) {
      std::set<int> s;
      for (int e : run) s.insert(static_cast<int>(*g.edge_index(m.edges[e].first, m.edges[e].second)));
      theirs.insert(s);
    }
    CHECK(mine == theirs);
  }
}
