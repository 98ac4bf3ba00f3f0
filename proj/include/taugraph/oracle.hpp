#pragma once

// Reference implementations that share no code path with the main
// algorithms. Tests and the verify command check the library against them.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

#include "taugraph/graph.hpp"

namespace taugraph::oracle {

/// All-pairs distances by Floyd-Warshall; `kInf` marks unreachable pairs.
inline constexpr unsigned kInf = ~0U;

inline std::vector<std::vector<unsigned>> floyd_warshall(const Graph& g) {
  const auto n = g.order();
  std::vector<std::vector<unsigned>> d(n, std::vector<unsigned>(n, kInf));
  for (Vertex i = 0; i < n; ++i) {
    d[i][i] = 0;
    for (Vertex j = 0; j < n; ++j)
      if (g.adjacent(i, j)) d[i][j] = 1;
  }
  for (Vertex k = 0; k < n; ++k)
    for (Vertex i = 0; i < n; ++i)
      for (Vertex j = 0; j < n; ++j)
        if (d[i][k] != kInf && d[k][j] != kInf) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  return d;
}

/// Per-vertex eccentricity from the Floyd-Warshall table (graph must be
/// connected).
inline std::vector<unsigned> eccentricities(const Graph& g) {
  const auto d = floyd_warshall(g);
  std::vector<unsigned> out;
  for (const auto& row : d) out.push_back(*std::max_element(row.begin(), row.end()));
  return out;
}

inline std::int64_t tau(const Graph& g) {
  const auto e = eccentricities(g);
  return std::accumulate(e.begin(), e.end(), std::int64_t{0});
}

/// Isomorphism key by exhaustive search over all n! relabellings: the
/// least upper-triangle bitstring. Practical for n <= 8.
struct BruteKey {
  std::size_t n = 0;
  std::uint64_t bits = 0;

  friend auto operator<=>(const BruteKey&, const BruteKey&) = default;
};

inline BruteKey brute_force_key(const Graph& g) {
  const auto n = g.order();
  if (n > 10) throw GraphError("brute_force_key is limited to n <= 10");
  const auto edges = g.edges();
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), Vertex{0});
  // Bit index of pair (i, j), i < j, in row-major upper-triangle order.
  auto index = [n](Vertex i, Vertex j) {
    if (i > j) std::swap(i, j);
    return static_cast<unsigned>(i * n - i * (i + 1) / 2 + (j - i - 1));
  };
  const unsigned width = static_cast<unsigned>(n * (n - 1) / 2);
  BruteKey best{n, ~std::uint64_t{0}};
  do {
    std::uint64_t bits = 0;
    for (const auto& e : edges) bits |= std::uint64_t{1} << (width - 1 - index(perm[e.u], perm[e.v]));
    best.bits = std::min(best.bits, bits);
  } while (std::next_permutation(perm.begin(), perm.end()));
  if (edges.empty()) best.bits = 0;
  return best;
}

/// Decodes a Pruefer sequence over 0..n-1 (length n-2) into a labelled tree.
inline Graph prufer_decode(const std::vector<Vertex>& seq) {
  const auto n = seq.size() + 2;
  std::vector<unsigned> degree(n, 1);
  for (auto v : seq) ++degree[v];
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (auto v : seq) {
    Vertex leaf = 0;
    while (degree[leaf] != 1) ++leaf;
    edges.emplace_back(leaf, v);
    --degree[leaf];
    --degree[v];
  }
  Vertex a = 0;
  while (degree[a] != 1) ++a;
  Vertex b = a + 1;
  while (degree[b] != 1) ++b;
  edges.emplace_back(a, b);
  return Graph::from_edges(n, edges);
}

/// Calls fn on all n^(n-2) labelled trees on n >= 2 vertices.
inline void for_each_labeled_tree(std::size_t n, const std::function<void(const Graph&)>& fn) {
  if (n < 2) throw GraphError("labelled tree enumeration needs n >= 2");
  std::vector<Vertex> seq(n - 2, 0);
  for (;;) {
    fn(prufer_decode(seq));
    std::size_t i = 0;
    while (i < seq.size() && ++seq[i] == n) seq[i++] = 0;
    if (i == seq.size()) return;
  }
}

/// Calls fn on every labelled connected graph with n vertices and m edges.
/// Connectivity is decided by union-find.
inline void for_each_labeled_connected(std::size_t n, std::size_t m, const std::function<void(const Graph&)>& fn) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  if (m > pairs.size()) return;
  std::vector<char> pick(pairs.size(), 0);
  std::fill(pick.end() - static_cast<long>(m), pick.end(), 1);
  do {
    std::vector<Vertex> parent(n);
    std::iota(parent.begin(), parent.end(), Vertex{0});
    std::function<Vertex(Vertex)> find = [&](Vertex x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    std::vector<std::pair<Vertex, Vertex>> chosen;
    std::size_t components = n;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if (!pick[i]) continue;
      chosen.push_back(pairs[i]);
      auto a = find(pairs[i].first);
      auto b = find(pairs[i].second);
      if (a != b) {
        parent[a] = b;
        --components;
      }
    }
    if (components == 1) fn(Graph::from_edges(n, chosen));
  } while (std::next_permutation(pick.begin(), pick.end()));
}

/// Distinct isomorphism classes (by brute_force_key) of labelled connected
/// graphs with n vertices and m edges.
inline std::set<BruteKey> connected_classes(std::size_t n, std::size_t m) {
  std::set<BruteKey> out;
  for_each_labeled_connected(n, m, [&](const Graph& g) { out.insert(brute_force_key(g)); });
  return out;
}

/// Calls fn on every labelled k-regular graph on n vertices (backtracking
/// over the neighbours each vertex still needs among higher vertices).
inline void for_each_labeled_regular(std::size_t n, std::size_t k, const std::function<void(const Graph&)>& fn) {
  if (k >= n || (n * k) % 2 != 0) return;
  std::vector<std::size_t> deg(n, 0);
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::function<void(Vertex, Vertex)> place = [&](Vertex v, Vertex from) {
    if (v == n) {
      fn(Graph::from_edges(n, edges));
      return;
    }
    if (deg[v] == k) {
      place(v + 1, v + 2);
      return;
    }
    for (Vertex w = from; w < n; ++w) {
      if (deg[w] == k) continue;
      ++deg[v];
      ++deg[w];
      edges.emplace_back(v, w);
      place(v, w + 1);
      edges.pop_back();
      --deg[v];
      --deg[w];
    }
  };
  place(0, 1);
}

/// Perfect matching existence by branching on the lowest uncovered vertex.
inline bool has_perfect_matching(const Graph& g) {
  std::function<bool(std::uint64_t)> solve = [&](std::uint64_t left) {
    if (left == 0) return true;
    const auto v = static_cast<Vertex>(std::countr_zero(left));
    for (Vertex w = v + 1; w < g.order(); ++w) {
      if ((left >> w & 1U) && g.adjacent(v, w) && solve(left & ~(std::uint64_t{1} << v) & ~(std::uint64_t{1} << w))) return true;
    }
    return false;
  };
  return solve(g.order() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << g.order()) - 1);
}

inline int cyclomatic_number(const Graph& g) {
  return static_cast<int>(g.size()) - static_cast<int>(g.order()) + 1;
}

}  // namespace taugraph::oracle
