#include "hpidx/canonical.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>

#include "hpidx/errors.hpp"

namespace hpidx {
namespace {

using Colors = std::vector<int>;
using Perm = std::vector<Vertex>;

class Canonizer {
 public:
  explicit Canonizer(const Graph& g) : n_(g.vertex_count()), adj_(n_, 0) {
    for (const Edge& e : g.edges()) {
      adj_[e.u] |= std::uint64_t{1} << e.v;
      adj_[e.v] |= std::uint64_t{1} << e.u;
    }
  }

  void run() {
    Colors colors(n_, 0);
    Perm prefix;
    search(std::move(colors), prefix);
  }

  const std::string& certificate() const { return best_cert_; }
  const Perm& order() const { return best_order_; }

 private:
  // Colour refinement until the partition is equitable. Cells stay ordered
  // by their previous colour, so refinement never reorders existing cells.
  void refine(Colors& colors) const {
    std::size_t cells = count_cells(colors);
    while (true) {
      std::vector<std::pair<std::vector<int>, Vertex>> sigs(n_);
      for (Vertex v = 0; v < n_; ++v) {
        std::vector<int> sig{colors[v]};
        for (std::uint64_t m = adj_[v]; m; m &= m - 1) {
          sig.push_back(colors[std::countr_zero(m)]);
        }
        std::sort(sig.begin() + 1, sig.end());
        sigs[v] = {std::move(sig), v};
      }
      std::sort(sigs.begin(), sigs.end());
      int rank = -1;
      for (std::size_t i = 0; i < sigs.size(); ++i) {
        if (i == 0 || sigs[i].first != sigs[i - 1].first) ++rank;
        colors[sigs[i].second] = rank;
      }
      const std::size_t next = static_cast<std::size_t>(rank + 1);
      if (next == cells) return;
      cells = next;
    }
  }

  static std::size_t count_cells(const Colors& colors) {
    if (colors.empty()) return 0;
    return static_cast<std::size_t>(*std::max_element(colors.begin(), colors.end()) + 1);
  }

  std::string leaf_certificate(const Colors& colors, Perm& order) const {
    order.assign(n_, 0);
    for (Vertex v = 0; v < n_; ++v) order[colors[v]] = v;
    std::string cert;
    cert.reserve(n_ * (n_ - 1) / 2);
    for (std::size_t j = 1; j < n_; ++j) {
      for (std::size_t i = 0; i < j; ++i) {
        cert.push_back((adj_[order[i]] >> order[j]) & 1 ? '1' : '0');
      }
    }
    return cert;
  }

  // Orbits of the subgroup generated by known automorphisms fixing `prefix`.
  std::vector<Vertex> stabilizer_orbits(const Perm& prefix) const {
    std::vector<Vertex> parent(n_);
    std::iota(parent.begin(), parent.end(), Vertex{0});
    auto find = [&](Vertex x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const Perm& a : automorphisms_) {
      const bool fixes = std::all_of(prefix.begin(), prefix.end(), [&](Vertex p) { return a[p] == p; });
      if (!fixes) continue;
      for (Vertex v = 0; v < n_; ++v) {
        const Vertex x = find(v), y = find(a[v]);
        if (x != y) parent[std::max(x, y)] = std::min(x, y);
      }
    }
    for (Vertex v = 0; v < n_; ++v) parent[v] = find(v);
    return parent;
  }

  void search(Colors colors, Perm& prefix) {
    refine(colors);
    if (count_cells(colors) == n_) {
      Perm order;
      std::string cert = leaf_certificate(colors, order);
      if (best_order_.empty() || cert > best_cert_) {
        best_cert_ = std::move(cert);
        best_order_ = std::move(order);
      } else if (cert == best_cert_) {
        Perm aut(n_);
        for (std::size_t i = 0; i < n_; ++i) aut[order[i]] = best_order_[i];
        automorphisms_.push_back(std::move(aut));
      }
      return;
    }
    // First non-singleton cell in colour order.
    std::vector<std::size_t> sizes(count_cells(colors), 0);
    for (int c : colors) ++sizes[c];
    int target = 0;
    while (sizes[target] < 2) ++target;

    std::vector<Vertex> explored;
    for (Vertex v = 0; v < n_; ++v) {
      if (colors[v] != target) continue;
      if (!explored.empty()) {
        const auto orbits = stabilizer_orbits(prefix);
        const bool redundant = std::any_of(explored.begin(), explored.end(),
                                           [&](Vertex u) { return orbits[u] == orbits[v]; });
        if (redundant) continue;
      }
      Colors child(n_);
      for (Vertex u = 0; u < n_; ++u) {
        child[u] = 2 * colors[u] + (colors[u] == target && u != v ? 1 : 0);
      }
      prefix.push_back(v);
      search(std::move(child), prefix);
      prefix.pop_back();
      explored.push_back(v);
    }
  }

  std::size_t n_;
  std::vector<std::uint64_t> adj_;
  std::string best_cert_;
  Perm best_order_;
  std::vector<Perm> automorphisms_;
};

Canonizer canonize(const Graph& g, std::size_t cap) {
  if (g.vertex_count() > cap || g.vertex_count() > 64) {
    throw Error(ErrorKind::TooLargeForCanonicalization,
                "graph has " + std::to_string(g.vertex_count()) +
                    " vertices; canonicalization cap is " + std::to_string(std::min<std::size_t>(cap, 64)));
  }
  Canonizer c(g);
  if (g.vertex_count() > 0) c.run();
  return c;
}

}  // namespace

std::string canonical_key(const Graph& g, std::size_t cap) {
  const Canonizer c = canonize(g, cap);
  std::string key(1, static_cast<char>(g.vertex_count()));
  unsigned char byte = 0;
  int filled = 0;
  for (char bit : c.certificate()) {
    byte = static_cast<unsigned char>((byte << 1) | (bit == '1' ? 1 : 0));
    if (++filled == 8) {
      key.push_back(static_cast<char>(byte));
      byte = 0;
      filled = 0;
    }
  }
  if (filled > 0) key.push_back(static_cast<char>(byte << (8 - filled)));
  return key;
}

std::vector<Vertex> canonical_order(const Graph& g, std::size_t cap) {
  return canonize(g, cap).order();
}

std::string key_to_hex(const std::string& key) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(key.size() * 2);
  for (unsigned char c : key) {
    out.push_back(kDigits[c >> 4]);
    out.push_back(kDigits[c & 15]);
  }
  return out;
}

}  // namespace hpidx
