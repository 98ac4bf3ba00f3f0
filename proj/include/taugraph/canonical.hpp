#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "taugraph/graph.hpp"

namespace taugraph {

/// Label-invariant encoding of an unlabeled graph: equal keys iff the
/// graphs are isomorphic.
struct CanonicalKey {
  std::string bytes;

  friend auto operator<=>(const CanonicalKey&, const CanonicalKey&) = default;
};

namespace detail {

using Coloring = std::vector<unsigned>;

/// Colour refinement to the coarsest equitable partition finer than the
/// input. Cells are ordered by (old colour, sorted neighbour colours), so
/// the result depends only on the isomorphism class of (graph, colouring).
/// Returns the number of cells.
inline unsigned refine(const Graph& g, Coloring& color) {
  const auto n = g.order();
  std::vector<std::vector<unsigned>> sig(n);
  std::vector<Vertex> order(n);
  unsigned cells = 0;
  for (;;) {
    for (Vertex v = 0; v < n; ++v) {
      auto& s = sig[v];
      s.clear();
      s.push_back(color[v]);
      for_each_bit(g.neighbor_mask(v), [&](Vertex w) { s.push_back(color[w]); });
      std::sort(s.begin() + 1, s.end());
    }
    for (Vertex v = 0; v < n; ++v) order[v] = v;
    std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return sig[a] < sig[b]; });
    unsigned next = 0;
    Coloring fresh(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (i > 0 && sig[order[i]] != sig[order[i - 1]]) ++next;
      fresh[order[i]] = next;
    }
    const unsigned count = n == 0 ? 0 : next + 1;
    color.swap(fresh);
    if (count == cells) return count;
    cells = count;
  }
}

/// Individualisation-refinement search for the least relabelled adjacency
/// matrix. Branches that differ by swapping two twin vertices (same
/// neighbourhood apart from each other) are images under an automorphism
/// and are skipped.
class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Graph& g) : g_(g), twins_(g.order(), 0) {
    const auto n = g.order();
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex w = 0; w < n; ++w) {
        if (u != w && (g.neighbor_mask(u) & ~bit(w)) == (g.neighbor_mask(w) & ~bit(u))) twins_[u] |= bit(w);
      }
    }
  }

  std::vector<std::uint64_t> run() {
    Coloring start(g_.order());
    for (Vertex v = 0; v < g_.order(); ++v) start[v] = static_cast<unsigned>(g_.degree(v));
    descend(std::move(start));
    return best_;
  }

 private:
  void descend(Coloring color) {
    const auto n = g_.order();
    const unsigned cells = refine(g_, color);
    if (cells == n) {
      leaf(color);
      return;
    }
    std::vector<unsigned> size(cells, 0);
    for (auto c : color) ++size[c];
    unsigned target = 0;
    while (size[target] == 1) ++target;

    std::uint64_t tried = 0;
    for (Vertex v = 0; v < n; ++v) {
      if (color[v] != target || (twins_[v] & tried) != 0) continue;
      tried |= bit(v);
      Coloring split(n);
      for (Vertex u = 0; u < n; ++u) split[u] = 2 * color[u] + ((color[u] == target && u != v) ? 1 : 0);
      descend(std::move(split));
    }
  }

  void leaf(const Coloring& position) {
    std::vector<std::uint64_t> rows(g_.order(), 0);
    for (Vertex v = 0; v < g_.order(); ++v) {
      std::uint64_t row = 0;
      for_each_bit(g_.neighbor_mask(v), [&](Vertex w) { row |= bit(position[w]); });
      rows[position[v]] = row;
    }
    if (!have_best_ || rows < best_) {
      best_ = std::move(rows);
      have_best_ = true;
    }
  }

  const Graph& g_;
  std::vector<std::uint64_t> twins_;
  std::vector<std::uint64_t> best_;
  bool have_best_ = false;
};

inline CanonicalKey encode_rows(std::size_t n, const std::vector<std::uint64_t>& rows) {
  CanonicalKey key;
  key.bytes.push_back(static_cast<char>(n));
  unsigned char acc = 0;
  int filled = 0;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) {
      acc = static_cast<unsigned char>((acc << 1) | ((rows[i] >> j) & 1U));
      if (++filled == 8) {
        key.bytes.push_back(static_cast<char>(acc));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) key.bytes.push_back(static_cast<char>(acc << (8 - filled)));
  return key;
}

}  // namespace detail

/// Canonical key: the upper-triangle adjacency bitstring of the least
/// relabelling found by refinement-guided search.
inline CanonicalKey canonical_key(const Graph& g) {
  detail::CanonicalSearch search(g);
  return detail::encode_rows(g.order(), search.run());
}

/// The canonical representative encoded by a key from canonical_key.
inline Graph graph_from_key(const CanonicalKey& key) {
  if (key.bytes.empty()) throw GraphError("empty canonical key");
  const auto n = static_cast<std::size_t>(static_cast<unsigned char>(key.bytes[0]));
  std::vector<Edge> edges;
  std::size_t bitpos = 0;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j, ++bitpos) {
      const auto byte = static_cast<unsigned char>(key.bytes.at(1 + bitpos / 8));
      if ((byte >> (7 - bitpos % 8)) & 1U) edges.emplace_back(i, j);
    }
  }
  return Graph::from_edges(n, edges);
}

inline Graph canonical_form(const Graph& g) { return graph_from_key(canonical_key(g)); }

inline CanonicalKey tree_key(const Graph& t);

inline bool isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  if (is_tree(a) && is_tree(b)) return tree_key(a) == tree_key(b);
  return canonical_key(a) == canonical_key(b);
}

/// Linear-size encoding for trees: nested parentheses of the tree rooted at
/// its center (both halves, sorted, for a bicentral tree).
inline CanonicalKey tree_key(const Graph& t) {
  if (!is_tree(t)) throw GraphError("tree_key requires a tree");
  const auto centers = ecc_profile(t).center;
  std::function<std::string(Vertex, Vertex)> encode = [&](Vertex root, Vertex parent) {
    std::vector<std::string> kids;
    detail::for_each_bit(t.neighbor_mask(root), [&](Vertex w) {
      if (w != parent) kids.push_back(encode(w, root));
    });
    std::sort(kids.begin(), kids.end());
    std::string out = "(";
    for (const auto& k : kids) out += k;
    out += ")";
    return out;
  };
  const auto none = static_cast<Vertex>(t.order());
  CanonicalKey key;
  if (centers.size() == 1) {
    key.bytes = "1" + encode(centers[0], none);
  } else {
    auto a = encode(centers[0], centers[1]);
    auto b = encode(centers[1], centers[0]);
    if (b < a) std::swap(a, b);
    key.bytes = "2" + a + b;
  }
  return key;
}

}  // namespace taugraph
