#pragma once

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace taugraph {

using Vertex = unsigned;

/// Largest order a Graph may have; adjacency rows are 64-bit masks.
inline constexpr std::size_t kMaxOrder = 64;

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown when an eccentricity-based quantity is requested on a graph that
/// is not connected.
class DisconnectedGraph : public GraphError {
 public:
  DisconnectedGraph() : GraphError("graph is not connected; eccentricity is undefined") {}
};

/// Undirected edge stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(std::min(a, b)), v(std::max(a, b)) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline std::string to_string(const Edge& e) {
  return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")";
}

namespace detail {

inline constexpr std::uint64_t bit(Vertex v) { return std::uint64_t{1} << v; }

inline constexpr std::uint64_t full_mask(std::size_t n) {
  return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

/// Calls f(v) for every set bit v of mask, in increasing order.
template <typename F>
void for_each_bit(std::uint64_t mask, F&& f) {
  while (mask != 0) {
    f(static_cast<Vertex>(std::countr_zero(mask)));
    mask &= mask - 1;
  }
}

}  // namespace detail

/// Undirected simple graph on vertices 0..n-1 with bit-set adjacency.
///
/// Graphs are values: every edit returns a modified copy and leaves the
/// receiver untouched.
class Graph {
 public:
  Graph() = default;

  explicit Graph(std::size_t n) : n_(n), adj_(n, 0) {
    if (n > kMaxOrder) {
      throw GraphError("order " + std::to_string(n) + " exceeds the supported maximum " +
                       std::to_string(kMaxOrder));
    }
  }

  /// Builds a graph from an edge list. Repeated pairs (in either
  /// orientation) collapse to one edge; self-loops and out-of-range
  /// endpoints are rejected.
  static Graph from_edges(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edges) {
    Graph g(n);
    for (const auto& [a, b] : edges) {
      g.check_pair(a, b);
      g.link(a, b);
    }
    return g;
  }

  static Graph from_edges(std::size_t n, std::initializer_list<std::pair<Vertex, Vertex>> edges) {
    return from_edges(n, std::span<const std::pair<Vertex, Vertex>>(edges.begin(), edges.size()));
  }

  static Graph from_edges(std::size_t n, std::span<const Edge> edges) {
    Graph g(n);
    for (const auto& e : edges) {
      g.check_pair(e.u, e.v);
      g.link(e.u, e.v);
    }
    return g;
  }

  std::size_t order() const { return n_; }

  std::size_t size() const {
    std::size_t twice = 0;
    for (auto row : adj_) twice += static_cast<std::size_t>(std::popcount(row));
    return twice / 2;
  }

  bool adjacent(Vertex u, Vertex v) const {
    return u < n_ && v < n_ && (adj_[u] & detail::bit(v)) != 0;
  }

  std::uint64_t neighbor_mask(Vertex v) const { return adj_.at(v); }

  std::vector<Vertex> neighbors(Vertex v) const {
    std::vector<Vertex> out;
    detail::for_each_bit(adj_.at(v), [&](Vertex w) { out.push_back(w); });
    return out;
  }

  std::size_t degree(Vertex v) const { return static_cast<std::size_t>(std::popcount(adj_.at(v))); }

  /// All edges in ascending (u, v) order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (Vertex u = 0; u < n_; ++u) {
      detail::for_each_bit(adj_[u] & ~detail::full_mask(u + 1), [&](Vertex v) { out.emplace_back(u, v); });
    }
    return out;
  }

  Graph with_edge(Vertex u, Vertex v) const {
    check_pair(u, v);
    if (adjacent(u, v)) throw GraphError("edge " + to_string(Edge(u, v)) + " already present");
    Graph g = *this;
    g.link(u, v);
    return g;
  }

  Graph without_edge(Vertex u, Vertex v) const {
    check_pair(u, v);
    if (!adjacent(u, v)) throw GraphError("edge " + to_string(Edge(u, v)) + " not present");
    Graph g = *this;
    g.adj_[u] &= ~detail::bit(v);
    g.adj_[v] &= ~detail::bit(u);
    return g;
  }

  /// Deletes v and its incident edges; vertices above v shift down by one.
  Graph without_vertex(Vertex v) const {
    if (v >= n_) throw GraphError("vertex " + std::to_string(v) + " out of range");
    Graph g(n_ - 1);
    for (const auto& e : edges()) {
      if (e.u == v || e.v == v) continue;
      g.link(e.u > v ? e.u - 1 : e.u, e.v > v ? e.v - 1 : e.v);
    }
    return g;
  }

  /// Returns the graph with vertex v renamed to perm[v].
  Graph relabeled(std::span<const Vertex> perm) const {
    if (perm.size() != n_) throw GraphError("permutation size does not match graph order");
    Graph g(n_);
    for (const auto& e : edges()) g.link(perm[e.u], perm[e.v]);
    return g;
  }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_pair(Vertex u, Vertex v) const {
    if (u >= n_ || v >= n_) {
      throw GraphError("edge " + to_string(Edge(u, v)) + " has an endpoint outside 0.." +
                       std::to_string(n_ == 0 ? 0 : n_ - 1));
    }
    if (u == v) throw GraphError("self-loop at vertex " + std::to_string(u));
  }

  void link(Vertex u, Vertex v) {
    adj_[u] |= detail::bit(v);
    adj_[v] |= detail::bit(u);
  }

  std::size_t n_ = 0;
  std::vector<std::uint64_t> adj_;
};

/// Compact one-line form "n:u-v,u-v,..." used in diagnostics.
inline std::string describe(const Graph& g) {
  std::string out = std::to_string(g.order()) + ":";
  bool first = true;
  for (const auto& e : g.edges()) {
    out += (first ? "" : ",") + std::to_string(e.u) + "-" + std::to_string(e.v);
    first = false;
  }
  return out;
}

/// Hop distance; std::nullopt marks an unreachable vertex.
using Distance = std::optional<unsigned>;
using DistanceTable = std::vector<Distance>;

inline DistanceTable bfs_distances(const Graph& g, Vertex src) {
  if (src >= g.order()) throw GraphError("source vertex " + std::to_string(src) + " out of range");
  DistanceTable dist(g.order());
  std::uint64_t seen = detail::bit(src);
  std::uint64_t frontier = seen;
  dist[src] = 0;
  for (unsigned d = 1; frontier != 0; ++d) {
    std::uint64_t next = 0;
    detail::for_each_bit(frontier, [&](Vertex v) { next |= g.neighbor_mask(v); });
    next &= ~seen;
    detail::for_each_bit(next, [&](Vertex v) { dist[v] = d; });
    seen |= next;
    frontier = next;
  }
  return dist;
}

inline bool is_connected(const Graph& g) {
  if (g.order() == 0) return false;
  std::uint64_t seen = 1;
  std::uint64_t frontier = 1;
  while (frontier != 0) {
    std::uint64_t next = 0;
    detail::for_each_bit(frontier, [&](Vertex v) { next |= g.neighbor_mask(v); });
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == detail::full_mask(g.order());
}

/// Eccentricity of v, or std::nullopt if some vertex is unreachable from v.
inline std::optional<unsigned> eccentricity(const Graph& g, Vertex v) {
  std::uint64_t seen = detail::bit(v);
  std::uint64_t frontier = seen;
  unsigned layers = 0;
  for (;;) {
    std::uint64_t next = 0;
    detail::for_each_bit(frontier, [&](Vertex w) { next |= g.neighbor_mask(w); });
    next &= ~seen;
    if (next == 0) break;
    seen |= next;
    frontier = next;
    ++layers;
  }
  if (seen != detail::full_mask(g.order())) return std::nullopt;
  return layers;
}

/// All-pairs hop distances of a connected graph (n BFS runs).
inline std::vector<std::vector<unsigned>> distance_matrix(const Graph& g) {
  std::vector<std::vector<unsigned>> out(g.order(), std::vector<unsigned>(g.order()));
  for (Vertex s = 0; s < g.order(); ++s) {
    auto row = bfs_distances(g, s);
    for (Vertex t = 0; t < g.order(); ++t) {
      if (!row[t]) throw DisconnectedGraph();
      out[s][t] = *row[t];
    }
  }
  return out;
}

struct EccProfile {
  std::vector<unsigned> ecc;
  unsigned rad = 0;
  unsigned diam = 0;
  std::vector<Vertex> center;
  std::vector<Vertex> peripheral;
};

inline EccProfile ecc_profile(const Graph& g) {
  if (g.order() == 0) throw DisconnectedGraph();
  EccProfile p;
  p.ecc.reserve(g.order());
  for (Vertex v = 0; v < g.order(); ++v) {
    auto e = eccentricity(g, v);
    if (!e) throw DisconnectedGraph();
    p.ecc.push_back(*e);
  }
  p.rad = *std::min_element(p.ecc.begin(), p.ecc.end());
  p.diam = *std::max_element(p.ecc.begin(), p.ecc.end());
  for (Vertex v = 0; v < g.order(); ++v) {
    if (p.ecc[v] == p.rad) p.center.push_back(v);
    if (p.ecc[v] == p.diam) p.peripheral.push_back(v);
  }
  return p;
}

/// Vertices at maximum distance from u.
inline std::vector<Vertex> eccentric_set(const Graph& g, Vertex u) {
  auto dist = bfs_distances(g, u);
  unsigned far = 0;
  for (const auto& d : dist) {
    if (!d) throw DisconnectedGraph();
    far = std::max(far, *d);
  }
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (*dist[v] == far) out.push_back(v);
  }
  return out;
}

struct Path {
  std::vector<Vertex> vertices;

  std::size_t length() const { return vertices.empty() ? 0 : vertices.size() - 1; }
  Vertex front() const { return vertices.front(); }
  Vertex back() const { return vertices.back(); }
};

/// A diametrical path: starts at the smallest peripheral vertex and is the
/// lexicographically least vertex sequence among shortest paths of length
/// diam(g) leaving it.
inline Path diametrical_path(const Graph& g) {
  const auto profile = ecc_profile(g);
  const Vertex src = profile.peripheral.front();
  const auto dist = bfs_distances(g, src);
  const auto n = g.order();

  // reach[w]: some vertex at distance diam is reachable from w along
  // strictly increasing BFS layers.
  std::vector<char> reach(n, 0);
  for (unsigned level = profile.diam + 1; level-- > 0;) {
    for (Vertex w = 0; w < n; ++w) {
      if (*dist[w] != level) continue;
      if (level == profile.diam) {
        reach[w] = 1;
        continue;
      }
      detail::for_each_bit(g.neighbor_mask(w), [&](Vertex z) {
        if (*dist[z] == level + 1 && reach[z]) reach[w] = 1;
      });
    }
  }

  Path path;
  path.vertices.push_back(src);
  Vertex at = src;
  for (unsigned level = 1; level <= profile.diam; ++level) {
    Vertex pick = static_cast<Vertex>(n);
    detail::for_each_bit(g.neighbor_mask(at), [&](Vertex z) {
      if (pick == n && *dist[z] == level && reach[z]) pick = z;
    });
    path.vertices.push_back(pick);
    at = pick;
  }
  return path;
}

/// Every shortest path from u to v, each as a vertex sequence.
inline std::vector<Path> shortest_paths(const Graph& g, Vertex u, Vertex v) {
  const auto to_v = bfs_distances(g, v);
  std::vector<Path> out;
  if (!to_v[u]) return out;
  Path current;
  current.vertices.push_back(u);
  auto extend = [&](auto&& self, Vertex at) -> void {
    if (at == v) {
      out.push_back(current);
      return;
    }
    detail::for_each_bit(g.neighbor_mask(at), [&](Vertex z) {
      if (to_v[z] && *to_v[z] + 1 == *to_v[at]) {
        current.vertices.push_back(z);
        self(self, z);
        current.vertices.pop_back();
      }
    });
  };
  extend(extend, u);
  return out;
}

/// Every simple cycle as a vertex sequence starting at its smallest vertex;
/// each cycle is reported once (one orientation).
inline std::vector<std::vector<Vertex>> simple_cycles(const Graph& g) {
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.order(); ++s) {
    stack.assign(1, s);
    std::uint64_t on_path = detail::bit(s);
    auto walk = [&](auto&& self, Vertex at) -> void {
      detail::for_each_bit(g.neighbor_mask(at), [&](Vertex z) {
        if (z == s && stack.size() >= 3 && stack[1] < stack.back()) {
          out.push_back(stack);
        } else if (z > s && (on_path & detail::bit(z)) == 0) {
          stack.push_back(z);
          on_path |= detail::bit(z);
          self(self, z);
          on_path &= ~detail::bit(z);
          stack.pop_back();
        }
      });
    };
    walk(walk, s);
  }
  return out;
}

inline std::vector<Vertex> pendant_vertices(const Graph& g) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 1) out.push_back(v);
  }
  return out;
}

enum class GraphClass { tree, unicyclic, bicyclic, other };

inline std::string to_string(GraphClass c) {
  switch (c) {
    case GraphClass::tree: return "tree";
    case GraphClass::unicyclic: return "unicyclic";
    case GraphClass::bicyclic: return "bicyclic";
    case GraphClass::other: return "other";
  }
  return "other";
}

inline GraphClass classify(const Graph& g) {
  if (!is_connected(g)) return GraphClass::other;
  const auto n = g.order();
  const auto m = g.size();
  if (m + 1 == n) return GraphClass::tree;
  if (m == n) return GraphClass::unicyclic;
  if (m == n + 1) return GraphClass::bicyclic;
  return GraphClass::other;
}

inline bool is_tree(const Graph& g) { return classify(g) == GraphClass::tree; }

}  // namespace taugraph
