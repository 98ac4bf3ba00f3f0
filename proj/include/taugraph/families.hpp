#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "taugraph/canonical.hpp"
#include "taugraph/family_spec.hpp"
#include "taugraph/graph.hpp"
#include "taugraph/metrics.hpp"

namespace taugraph {

// Vertex layouts (fixed so traces and golden files stay stable):
//   path             0-1-...-(n-1)
//   cycle            path plus (n-1, 0)
//   star             centre 0, leaves 1..n-1
//   complete         all pairs
//   complete_bip.    parts {0..k-1} and {k..n-1}
//   U1               star plus leaf edge (1,2)
//   U2               triangle {0,1,2}, pendant path 2-3-...-(n-1)
//   B1               star plus leaf edges (1,2), (3,4)
//   B1prime          star plus leaf edges (1,2), (2,3)
//   B2               triangle {0,1,2}, path 2-...-(n-3), triangle {n-3,n-2,n-1};
//                    the triangles share vertex 2 when n = 5
//   B2prime          path 0-...-(n-2), apex n-1 adjacent to 0, 1, 2
//   subdivided_star  hub 0, middles 1..L, tip L+i on middle i (L = (n-1)/2)
//   S_star           hub 0, middles 1..n/2, tip n/2+i on middle i for
//                    i < n/2; middle n/2 is the hub's private pendant
//   double_star      centre 0 with leaves 1..k-1, centre k with leaves
//                    k+1..n-1, bridge (0,k)

inline Graph construct(const FamilySpec& spec) {
  require_valid(spec);
  const auto n = static_cast<Vertex>(spec.n);
  std::vector<Edge> e;
  auto path_edges = [&](Vertex from, Vertex to) {
    for (Vertex v = from; v < to; ++v) e.emplace_back(v, v + 1);
  };
  auto star_edges = [&] {
    for (Vertex v = 1; v < n; ++v) e.emplace_back(0, v);
  };
  switch (spec.id) {
    case FamilyId::path:
      path_edges(0, n - 1);
      break;
    case FamilyId::cycle:
      path_edges(0, n - 1);
      e.emplace_back(n - 1, 0);
      break;
    case FamilyId::star:
      star_edges();
      break;
    case FamilyId::complete:
      for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) e.emplace_back(u, v);
      break;
    case FamilyId::complete_bipartite: {
      const auto k = static_cast<Vertex>(spec.k);
      for (Vertex u = 0; u < k; ++u)
        for (Vertex v = k; v < n; ++v) e.emplace_back(u, v);
      break;
    }
    case FamilyId::U1:
      star_edges();
      e.emplace_back(1, 2);
      break;
    case FamilyId::U2:
      e = {{0, 1}, {0, 2}, {1, 2}};
      path_edges(2, n - 1);
      break;
    case FamilyId::B1:
      star_edges();
      e.emplace_back(1, 2);
      e.emplace_back(3, 4);
      break;
    case FamilyId::B1prime:
      star_edges();
      e.emplace_back(1, 2);
      e.emplace_back(2, 3);
      break;
    case FamilyId::B2: {
      const Vertex a = n - 3;
      e = {{0, 1}, {0, 2}, {1, 2}};
      path_edges(2, a);
      e.insert(e.end(), {{a, a + 1}, {a, a + 2}, {a + 1, a + 2}});
      break;
    }
    case FamilyId::B2prime:
      path_edges(0, n - 2);
      e.insert(e.end(), {{n - 1, 0}, {n - 1, 1}, {n - 1, 2}});
      break;
    case FamilyId::subdivided_star: {
      const Vertex legs = (n - 1) / 2;
      for (Vertex i = 1; i <= legs; ++i) {
        e.emplace_back(0, i);
        e.emplace_back(i, legs + i);
      }
      break;
    }
    case FamilyId::S_star: {
      const Vertex legs = n / 2;
      for (Vertex i = 1; i <= legs; ++i) {
        e.emplace_back(0, i);
        if (i < legs) e.emplace_back(i, legs + i);
      }
      break;
    }
    case FamilyId::double_star: {
      const auto k = static_cast<Vertex>(spec.k);
      for (Vertex v = 1; v < k; ++v) e.emplace_back(0, v);
      for (Vertex v = k + 1; v < n; ++v) e.emplace_back(k, v);
      e.emplace_back(0, k);
      break;
    }
  }
  return Graph::from_edges(n, e);
}

/// Class label the family member must carry.
inline GraphClass expected_class(const FamilySpec& spec) {
  const auto n = static_cast<long>(spec.n);
  auto by_size = [&](long m) {
    if (m == n - 1) return GraphClass::tree;
    if (m == n) return GraphClass::unicyclic;
    if (m == n + 1) return GraphClass::bicyclic;
    return GraphClass::other;
  };
  switch (spec.id) {
    case FamilyId::path:
    case FamilyId::star:
    case FamilyId::subdivided_star:
    case FamilyId::S_star:
    case FamilyId::double_star:
      return GraphClass::tree;
    case FamilyId::cycle:
    case FamilyId::U1:
    case FamilyId::U2:
      return GraphClass::unicyclic;
    case FamilyId::B1:
    case FamilyId::B1prime:
    case FamilyId::B2:
    case FamilyId::B2prime:
      return GraphClass::bicyclic;
    case FamilyId::complete:
      return by_size(n * (n - 1) / 2);
    case FamilyId::complete_bipartite:
      return by_size(static_cast<long>(spec.k) * (n - spec.k));
  }
  return GraphClass::other;
}

/// Overridable constructor; verification runs take one so a corrupted
/// builder can be injected.
using FamilyBuilder = std::function<Graph(const FamilySpec&)>;

struct IdentityCheck {
  std::string name;
  bool holds = false;
  std::string detail;
};

class FamilyIdentityError : public std::logic_error {
 public:
  FamilyIdentityError(std::vector<IdentityCheck> checks, const std::string& what)
      : std::logic_error(what), checks_(std::move(checks)) {}

  const std::vector<IdentityCheck>& checks() const { return checks_; }

 private:
  std::vector<IdentityCheck> checks_;
};

/// Evaluates the structural identities that tie a family to the others
/// (deletions, pendant counts, edge removals). Every identity is computed
/// and returned; FamilyIdentityError names the ones that fail.
inline std::vector<IdentityCheck> family_identities(const FamilySpec& spec, const FamilyBuilder& build = construct) {
  require_valid(spec);
  const Graph g = build(spec);
  const int n = spec.n;
  std::vector<IdentityCheck> out;
  auto add = [&](std::string name, bool holds, std::string detail = {}) {
    out.push_back({std::move(name), holds, std::move(detail)});
  };
  auto family = [&](FamilyId id, int order, int k = 0) { return build(FamilySpec{id, order, k}); };

  const bool order_ok = g.order() == static_cast<std::size_t>(n);
  add(std::string(to_string(spec.id)) + " has order n", order_ok);
  const auto label = classify(g);
  add(std::string(to_string(spec.id)) + " is " + to_string(expected_class(spec)), label == expected_class(spec),
      "classified as " + to_string(label));
  if (!order_ok || !is_connected(g)) {
    // Remaining identities need a connected graph of the right order.
  } else {
    switch (spec.id) {
      case FamilyId::U2: {
        const auto tree = g.order() > 2 && g.adjacent(0, 1) ? g.without_edge(0, 1) : g;
        const bool is_t = is_tree(tree);
        add("U2 - (0,1) is a tree", is_t);
        if (is_t) {
          // T1: P_{n-1} with a pendant on its second vertex.
          auto t1 = family(FamilyId::path, n - 1).edges();
          t1.emplace_back(1, static_cast<Vertex>(n - 1));
          add("U2 - (0,1) ~ P_{n-1} plus pendant at second vertex", isomorphic(tree, Graph::from_edges(n, t1)));
          add("tau(U2 - (0,1)) = tau(U2)", tau(tree) == tau(g),
              std::to_string(tau(tree)) + " vs " + std::to_string(tau(g)));
        }
        const auto expect = tau(family(FamilyId::path, n - 1)) + n - 2;
        add("tau(U2) = tau(P_{n-1}) + n - 2", tau(g) == expect,
            std::to_string(tau(g)) + " vs " + std::to_string(expect));
        break;
      }
      case FamilyId::B2: {
        const auto minus = g.without_vertex(static_cast<Vertex>(n - 1));
        const auto u2 = family(FamilyId::U2, n - 1);
        add("B2 - far triangle vertex ~ U2(n-1)", isomorphic(minus, u2));
        add("tau(B2) = tau(U2(n-1)) + n - 3", tau(g) == tau(u2) + n - 3,
            std::to_string(tau(g)) + " vs " + std::to_string(tau(u2) + n - 3));
        add("B2 has exactly two cycles", simple_cycles(g).size() == 2);
        break;
      }
      case FamilyId::B2prime: {
        const auto minus = g.without_vertex(static_cast<Vertex>(n - 1));
        const auto p = family(FamilyId::path, n - 1);
        add("B2prime - apex ~ P_{n-1}", isomorphic(minus, p));
        add("tau(B2prime) = tau(P_{n-1}) + n - 3", tau(g) == tau(p) + n - 3,
            std::to_string(tau(g)) + " vs " + std::to_string(tau(p) + n - 3));
        add("B2prime has exactly three cycles", simple_cycles(g).size() == 3);
        break;
      }
      case FamilyId::S_star: {
        const auto pendants = pendant_vertices(g).size();
        add("S_star has n/2 pendant vertices", pendants == static_cast<std::size_t>(n / 2),
            std::to_string(pendants) + " pendants");
        add("S_star ~ S_{n+1,2} minus a pendant",
            isomorphic(g, family(FamilyId::subdivided_star, n + 1).without_vertex(static_cast<Vertex>(n))));
        break;
      }
      case FamilyId::double_star:
        add("double_star has diameter 3", ecc_profile(g).diam == 3);
        break;
      case FamilyId::B1:
      case FamilyId::B1prime:
      case FamilyId::U1: {
        const auto p = ecc_profile(g);
        add(std::string(to_string(spec.id)) + " has a dominating vertex and diameter 2", p.rad == 1 && p.diam == 2);
        break;
      }
      default:
        break;
    }
  }

  std::string failed;
  for (const auto& c : out) {
    if (!c.holds) failed += (failed.empty() ? "" : "; ") + c.name + (c.detail.empty() ? "" : " [" + c.detail + "]");
  }
  if (!failed.empty()) throw FamilyIdentityError(out, to_string(spec) + ": identity failed: " + failed);
  return out;
}

}  // namespace taugraph
