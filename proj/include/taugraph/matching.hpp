#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <span>
#include <vector>

#include "taugraph/graph.hpp"

namespace taugraph {

struct Matching {
  std::vector<Edge> edges;  // sorted
  bool perfect = false;

  friend bool operator==(const Matching&, const Matching&) = default;
};

/// True iff `edges` are edges of g, pairwise disjoint, and cover every
/// vertex.
inline bool is_perfect_matching(const Graph& g, std::span<const Edge> edges) {
  std::uint64_t covered = 0;
  for (const auto& e : edges) {
    if (!g.adjacent(e.u, e.v)) return false;
    const auto both = detail::bit(e.u) | detail::bit(e.v);
    if ((covered & both) != 0) return false;
    covered |= both;
  }
  return covered == detail::full_mask(g.order());
}

/// Leaf peeling with an explicit leaf priority: among the current leaves
/// the one appearing earliest in `priority` is matched to its only
/// remaining neighbour, and both are removed. Returns nullopt when a
/// vertex is left without a partner.
inline std::optional<Matching> tree_perfect_matching(const Graph& t, std::span<const Vertex> priority) {
  if (!is_tree(t)) throw GraphError("tree_perfect_matching requires a tree");
  const auto n = t.order();
  if (priority.size() != n) throw GraphError("leaf priority must list every vertex once");
  if (n % 2 != 0) return std::nullopt;

  std::uint64_t alive = detail::full_mask(n);
  Matching m;
  while (alive != 0) {
    std::optional<Vertex> leaf;
    for (auto v : priority) {
      if ((alive & detail::bit(v)) == 0) continue;
      const auto live_deg = std::popcount(t.neighbor_mask(v) & alive);
      if (live_deg == 0) return std::nullopt;
      if (live_deg == 1) {
        leaf = v;
        break;
      }
    }
    // A forest with live vertices always has a leaf or an isolated vertex.
    const auto partner = static_cast<Vertex>(std::countr_zero(t.neighbor_mask(*leaf) & alive));
    m.edges.emplace_back(*leaf, partner);
    alive &= ~(detail::bit(*leaf) | detail::bit(partner));
  }
  std::sort(m.edges.begin(), m.edges.end());
  m.perfect = true;
  return m;
}

/// Perfect matching of a tree by leaf peeling in ascending vertex order.
/// A tree has at most one perfect matching.
inline std::optional<Matching> tree_perfect_matching(const Graph& t) {
  std::vector<Vertex> order(t.order());
  std::iota(order.begin(), order.end(), Vertex{0});
  return tree_perfect_matching(t, order);
}

inline bool is_conjugated(const Graph& t) { return tree_perfect_matching(t).has_value(); }

}  // namespace taugraph
