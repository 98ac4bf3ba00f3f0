#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "taugraph/graph.hpp"
#include "taugraph/matching.hpp"
#include "taugraph/metrics.hpp"

namespace taugraph {

class RewriteError : public GraphError {
 public:
  using GraphError::GraphError;
};

/// Edge (first, second) where `first` is the endpoint that gets re-attached.
using OrientedEdge = std::pair<Vertex, Vertex>;

struct RewriteStep {
  std::size_t iteration = 0;
  std::size_t round = 0;
  Edge removed;
  Edge added;
  std::int64_t tau_after = 0;
  unsigned rad_after = 0;
  Graph snapshot;
};

struct RewriteTrace {
  int algorithm = 0;
  Graph initial;
  std::int64_t initial_tau = 0;
  unsigned initial_rad = 0;
  std::vector<RewriteStep> steps;
  Graph final_graph;
  /// Algorithm 3 only: the perfect matching carried through every step.
  std::optional<Matching> matching;
  /// Set when the fixed vertex c was not central at the start of a round.
  bool center_drift = false;

  std::int64_t final_tau() const { return steps.empty() ? initial_tau : steps.back().tau_after; }
  unsigned final_rad() const { return steps.empty() ? initial_rad : steps.back().rad_after; }
  std::size_t rounds() const { return steps.empty() ? 0 : steps.back().round; }

  /// tau of the initial tree followed by tau at the end of each round.
  std::vector<std::int64_t> round_taus() const {
    std::vector<std::int64_t> out{initial_tau};
    for (std::size_t i = 0; i < steps.size(); ++i) {
      if (i + 1 == steps.size() || steps[i + 1].round != steps[i].round) out.push_back(steps[i].tau_after);
    }
    return out;
  }
};

namespace detail {

inline void require_rewritable_tree(const Graph& t, const char* who) {
  if (!is_tree(t)) throw RewriteError(std::string(who) + " requires a tree");
  if (t.order() < 4) throw RewriteError(std::string(who) + " requires n >= 4");
}

inline std::vector<OrientedEdge> pendant_moves(const Graph& t, Vertex u, Vertex v) {
  std::vector<OrientedEdge> out;
  for (Vertex x = 0; x < t.order(); ++x) {
    if (x == u || x == v || t.degree(x) != 1) continue;
    out.emplace_back(x, static_cast<Vertex>(std::countr_zero(t.neighbor_mask(x))));
  }
  return out;
}

/// (x, y) with d(x, c) = level and y the neighbour of x one step closer to c.
inline std::vector<OrientedEdge> radial_moves(const Graph& t, Vertex c, unsigned level) {
  const auto dist = bfs_distances(t, c);
  std::vector<OrientedEdge> out;
  for (Vertex x = 0; x < t.order(); ++x) {
    if (*dist[x] != level) continue;
    for_each_bit(t.neighbor_mask(x), [&](Vertex y) {
      if (*dist[y] + 1 == level) out.emplace_back(x, y);
    });
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// (u, v) for every path u-v-w with w a pendant at distance `level` from c;
/// vw is then necessarily a matching edge.
inline std::vector<OrientedEdge> matched_moves(const Graph& t, Vertex c, unsigned level) {
  const auto dist = bfs_distances(t, c);
  std::vector<OrientedEdge> out;
  for (Vertex w = 0; w < t.order(); ++w) {
    if (*dist[w] != level || t.degree(w) != 1) continue;
    const auto v = static_cast<Vertex>(std::countr_zero(t.neighbor_mask(w)));
    for_each_bit(t.neighbor_mask(v), [&](Vertex u) {
      if (u != w) out.emplace_back(u, v);
    });
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline RewriteStep make_step(std::size_t iteration, std::size_t round, Edge removed, Edge added, const Graph& g) {
  const auto r = index_report(g);
  return RewriteStep{iteration, round, removed, added, r.tau, r.rad, g};
}

inline void start_trace(RewriteTrace& trace, int algorithm, const Graph& t) {
  trace.algorithm = algorithm;
  trace.initial = t;
  const auto r = index_report(t);
  trace.initial_tau = r.tau;
  trace.initial_rad = r.rad;
}

inline void require_diametrical(const Graph& t, Vertex u, Vertex v) {
  const auto d = bfs_distances(t, u).at(v);
  if (!d || *d != ecc_profile(t).diam) {
    throw RewriteError("(" + std::to_string(u) + "," + std::to_string(v) + ") is not a diametrical pair");
  }
}

inline void require_central(const Graph& t, Vertex c) {
  const auto p = ecc_profile(t);
  if (c >= t.order() || p.ecc[c] != p.rad) throw RewriteError("vertex " + std::to_string(c) + " is not central");
}

}  // namespace detail

/// Pendant edges xy (x the pendant) with x outside the diametrical pair
/// {u, v}, in ascending (x, y) order.
inline std::vector<OrientedEdge> pendant_move_candidates(const Graph& t, Vertex u, Vertex v) {
  if (!is_tree(t)) throw RewriteError("pendant_move_candidates requires a tree");
  detail::require_diametrical(t, u, v);
  return detail::pendant_moves(t, u, v);
}

/// Edges xy with d(x, c) = rad and y the neighbour of x toward c.
inline std::vector<OrientedEdge> radial_candidates(const Graph& t, Vertex c) {
  if (!is_tree(t)) throw RewriteError("radial_candidates requires a tree");
  detail::require_central(t, c);
  return detail::radial_moves(t, c, ecc_profile(t).rad);
}

/// Edges uv lying on a path u-v-w where w is a pendant at distance rad
/// from c and vw belongs to the perfect matching m.
inline std::vector<OrientedEdge> matched_pair_candidates(const Graph& t, Vertex c, const Matching& m) {
  if (!is_tree(t)) throw RewriteError("matched_pair_candidates requires a tree");
  if (!m.perfect || !is_perfect_matching(t, m.edges)) throw RewriteError("matching is not a perfect matching of the tree");
  detail::require_central(t, c);
  return detail::matched_moves(t, c, ecc_profile(t).rad);
}

/// Grows a diametrical path until the tree is P_n: each step moves a
/// pendant x (not an endpoint) onto the moving endpoint u, and x becomes
/// the new u. tau strictly increases with every step.
inline RewriteTrace algorithm1(const Graph& tree) {
  detail::require_rewritable_tree(tree, "algorithm 1");
  RewriteTrace trace;
  detail::start_trace(trace, 1, tree);
  Graph t = tree;
  const auto path = diametrical_path(t);
  Vertex u = path.front();
  const Vertex v = path.back();
  for (std::size_t it = 1;; ++it) {
    const auto cand = detail::pendant_moves(t, u, v);
    if (cand.empty()) break;
    if (it > t.order()) throw std::logic_error("algorithm 1 exceeded its step bound");
    const auto [x, y] = cand.front();
    t = t.without_edge(x, y).with_edge(u, x);
    trace.steps.push_back(detail::make_step(it, 1, Edge(x, y), Edge(u, x), t));
    u = x;
  }
  trace.final_graph = t;
  return trace;
}

/// Pulls every vertex at distance rad from a fixed central vertex c onto c,
/// one round per radius value, until rad = 1 (the star).
inline RewriteTrace algorithm2(const Graph& tree) {
  detail::require_rewritable_tree(tree, "algorithm 2");
  RewriteTrace trace;
  detail::start_trace(trace, 2, tree);
  Graph t = tree;
  auto profile = ecc_profile(t);
  const Vertex c = profile.center.front();
  std::size_t it = 0;
  for (std::size_t round = 1; profile.rad != 1; ++round) {
    if (profile.ecc[c] != profile.rad) trace.center_drift = true;
    const auto cand = detail::radial_moves(t, c, profile.ecc[c]);
    if (cand.empty() || round > t.order()) throw std::logic_error("algorithm 2 made no progress");
    for (const auto& [x, y] : cand) {
      t = t.without_edge(x, y).with_edge(c, x);
      trace.steps.push_back(detail::make_step(++it, round, Edge(x, y), Edge(c, x), t));
    }
    profile = ecc_profile(t);
  }
  trace.final_graph = t;
  return trace;
}

/// Conjugated-tree counterpart of algorithm2: each matched pair v-w whose
/// pendant w lies at distance rad from c is re-hung from c by replacing uv
/// with cv, until rad = 2. The perfect matching is preserved throughout.
inline RewriteTrace algorithm3(const Graph& tree) {
  detail::require_rewritable_tree(tree, "algorithm 3");
  if (tree.order() % 2 != 0) throw RewriteError("algorithm 3 requires an even order");
  auto m = tree_perfect_matching(tree);
  if (!m) throw RewriteError("algorithm 3: no perfect matching (tree is not conjugated)");
  RewriteTrace trace;
  detail::start_trace(trace, 3, tree);
  trace.matching = m;
  Graph t = tree;
  auto profile = ecc_profile(t);
  const Vertex c = profile.center.front();
  std::size_t it = 0;
  for (std::size_t round = 1; profile.rad != 2; ++round) {
    if (profile.ecc[c] != profile.rad) trace.center_drift = true;
    const auto cand = detail::matched_moves(t, c, profile.ecc[c]);
    if (cand.empty() || round > t.order()) throw std::logic_error("algorithm 3 made no progress");
    for (const auto& [u, v] : cand) {
      t = t.without_edge(u, v).with_edge(c, v);
      trace.steps.push_back(detail::make_step(++it, round, Edge(u, v), Edge(c, v), t));
    }
    profile = ecc_profile(t);
  }
  trace.final_graph = t;
  return trace;
}

inline RewriteTrace run_algorithm(int algorithm, const Graph& tree) {
  switch (algorithm) {
    case 1: return algorithm1(tree);
    case 2: return algorithm2(tree);
    case 3: return algorithm3(tree);
    default: throw RewriteError("unknown algorithm " + std::to_string(algorithm));
  }
}

/// Line-oriented trace document:
///   algorithm A / n N / initial TAU RAD
///   step ITER ROUND RU RV AU AV TAU RAD   (one per step)
///   final TAU RAD STEPS
inline void write_trace(std::ostream& out, const RewriteTrace& trace) {
  out << "algorithm " << trace.algorithm << '\n';
  out << "n " << trace.initial.order() << '\n';
  out << "initial " << trace.initial_tau << ' ' << trace.initial_rad << '\n';
  for (const auto& s : trace.steps) {
    out << "step " << s.iteration << ' ' << s.round << ' ' << s.removed.u << ' ' << s.removed.v << ' ' << s.added.u
        << ' ' << s.added.v << ' ' << s.tau_after << ' ' << s.rad_after << '\n';
  }
  out << "final " << trace.final_tau() << ' ' << trace.final_rad() << ' ' << trace.steps.size() << '\n';
}

inline std::string trace_string(const RewriteTrace& trace) {
  std::ostringstream out;
  write_trace(out, trace);
  return out.str();
}

/// Problems with a trace's own invariants (empty when it is sound): order
/// and tree shape of every snapshot, edge bookkeeping, the algorithm's
/// monotonicity, and matching conservation for algorithm 3.
inline std::vector<std::string> trace_violations(const RewriteTrace& trace) {
  std::vector<std::string> out;
  const Graph* prev = &trace.initial;
  std::int64_t prev_tau = trace.initial_tau;
  for (const auto& s : trace.steps) {
    const auto tag = "step " + std::to_string(s.iteration) + ": ";
    if (s.snapshot.order() != trace.initial.order() || !is_tree(s.snapshot)) out.push_back(tag + "snapshot is not a tree of order n");
    if (!prev->adjacent(s.removed.u, s.removed.v)) out.push_back(tag + "removed edge absent before the step");
    if (prev->adjacent(s.added.u, s.added.v)) out.push_back(tag + "added edge present before the step");
    if (trace.algorithm == 1 && s.tau_after <= prev_tau) out.push_back(tag + "tau did not increase");
    if (trace.algorithm == 3 && trace.matching && !is_perfect_matching(s.snapshot, trace.matching->edges)) {
      out.push_back(tag + "perfect matching not preserved");
    }
    prev = &s.snapshot;
    prev_tau = s.tau_after;
  }
  if (trace.algorithm == 1 && trace.steps.size() + 1 > trace.initial.order()) out.push_back("more than n-1 steps");
  if (trace.algorithm == 2 || trace.algorithm == 3) {
    const auto taus = trace.round_taus();
    for (std::size_t i = 1; i < taus.size(); ++i) {
      if (taus[i] >= taus[i - 1]) out.push_back("round " + std::to_string(i) + " did not decrease tau");
    }
    unsigned last_rad = trace.initial_rad;
    for (std::size_t i = 0; i < trace.steps.size(); ++i) {
      const auto& s = trace.steps[i];
      if (i + 1 == trace.steps.size() || trace.steps[i + 1].round != s.round) {
        if (s.rad_after >= last_rad) out.push_back("round " + std::to_string(s.round) + " did not lower rad");
        last_rad = s.rad_after;
      }
    }
  }
  if (trace.center_drift) out.push_back("fixed vertex c stopped being central");
  return out;
}

}  // namespace taugraph
