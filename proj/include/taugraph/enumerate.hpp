#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "taugraph/canonical.hpp"
#include "taugraph/graph.hpp"
#include "taugraph/matching.hpp"
#include "taugraph/metrics.hpp"

namespace taugraph {

enum class EnumClass { tree, unicyclic, bicyclic, conjugated_tree };

inline std::string_view to_string(EnumClass c) {
  switch (c) {
    case EnumClass::tree: return "tree";
    case EnumClass::unicyclic: return "unicyclic";
    case EnumClass::bicyclic: return "bicyclic";
    case EnumClass::conjugated_tree: return "conjugated-tree";
  }
  return "?";
}

inline std::optional<EnumClass> parse_enum_class(std::string_view s) {
  for (auto c : {EnumClass::tree, EnumClass::unicyclic, EnumClass::bicyclic, EnumClass::conjugated_tree}) {
    if (to_string(c) == s) return c;
  }
  return std::nullopt;
}

/// Hard ceiling on enumerated orders.
inline constexpr int kMaxEnumerationOrder = 16;

class EnumerationBoundError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Upper order bounds per class. The defaults keep a full verification run
/// short; they may be raised up to kMaxEnumerationOrder.
struct EnumerationLimits {
  int tree = 12;
  int unicyclic = 10;
  int bicyclic = 9;
  int conjugated = 12;

  int max_for(EnumClass c) const {
    switch (c) {
      case EnumClass::tree: return tree;
      case EnumClass::unicyclic: return unicyclic;
      case EnumClass::bicyclic: return bicyclic;
      case EnumClass::conjugated_tree: return conjugated;
    }
    return 0;
  }
};

inline int min_order(EnumClass c) {
  switch (c) {
    case EnumClass::tree: return 1;
    case EnumClass::unicyclic: return 3;
    case EnumClass::bicyclic: return 4;
    case EnumClass::conjugated_tree: return 2;
  }
  return 1;
}

namespace detail {

inline void check_bounds(EnumClass c, int n, const EnumerationLimits& limits) {
  const int hi = std::min(limits.max_for(c), kMaxEnumerationOrder);
  if (n < min_order(c) || n > hi) {
    throw EnumerationBoundError(std::string(to_string(c)) + " enumeration supports " + std::to_string(min_order(c)) +
                                " <= n <= " + std::to_string(hi) + ", got " + std::to_string(n));
  }
  if (c == EnumClass::conjugated_tree && n % 2 != 0) {
    throw EnumerationBoundError("conjugated trees have even order, got " + std::to_string(n));
  }
}

using KeyedGraphs = std::map<CanonicalKey, Graph>;

/// Applies `expand(input, sink)` to every input across `threads` workers
/// and merges the per-worker maps. The merged map is ordered by key, so
/// the result does not depend on the thread count.
template <typename Expand>
KeyedGraphs collect_parallel(std::span<const Graph> inputs, unsigned threads, Expand expand) {
  threads = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(inputs.size())));
  std::vector<KeyedGraphs> parts(threads);
  auto work = [&](unsigned id) {
    for (std::size_t i = id; i < inputs.size(); i += threads) expand(inputs[i], parts[id]);
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned id = 0; id < threads; ++id) pool.emplace_back(work, id);
  }
  KeyedGraphs merged;
  for (auto& p : parts) merged.merge(p);
  return merged;
}

inline void insert_canonical(KeyedGraphs& sink, const Graph& g) {
  auto key = canonical_key(g);
  if (sink.find(key) == sink.end()) {
    auto rep = graph_from_key(key);
    sink.emplace(std::move(key), std::move(rep));
  }
}

inline std::vector<Graph> values(const KeyedGraphs& m) {
  std::vector<Graph> out;
  out.reserve(m.size());
  for (const auto& [k, g] : m) out.push_back(g);
  return out;
}

inline std::vector<Edge> non_edges(const Graph& g) {
  std::vector<Edge> out;
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v)
      if (!g.adjacent(u, v)) out.emplace_back(u, v);
  return out;
}

}  // namespace detail

/// Pairwise non-isomorphic trees of order n, as canonical representatives
/// in key order. Built by attaching a leaf to every vertex of every tree of
/// order n-1; every tree arises this way by deleting one of its leaves.
inline std::vector<Graph> gen_trees(int n, const EnumerationLimits& limits = {}, unsigned threads = 1) {
  detail::check_bounds(EnumClass::tree, n, limits);
  std::vector<Graph> level{Graph(1)};
  for (int order = 2; order <= n; ++order) {
    auto next = detail::collect_parallel(level, threads, [](const Graph& t, detail::KeyedGraphs& sink) {
      const auto old = static_cast<Vertex>(t.order());
      auto edges = t.edges();
      for (Vertex v = 0; v < old; ++v) {
        auto grown = edges;
        grown.emplace_back(v, old);
        detail::insert_canonical(sink, Graph::from_edges(old + 1, grown));
      }
    });
    level = detail::values(next);
  }
  return level;
}

/// Connected graphs with n edges: every tree plus one non-edge, deduped.
inline std::vector<Graph> gen_unicyclic(int n, const EnumerationLimits& limits = {}, unsigned threads = 1) {
  detail::check_bounds(EnumClass::unicyclic, n, limits);
  EnumerationLimits wide = limits;
  wide.tree = std::max(wide.tree, n);
  const auto trees = gen_trees(n, wide, threads);
  return detail::values(detail::collect_parallel(trees, threads, [](const Graph& t, detail::KeyedGraphs& sink) {
    for (const auto& e : detail::non_edges(t)) detail::insert_canonical(sink, t.with_edge(e.u, e.v));
  }));
}

/// Connected graphs with n+1 edges: every tree plus two distinct
/// non-edges, deduped.
inline std::vector<Graph> gen_bicyclic(int n, const EnumerationLimits& limits = {}, unsigned threads = 1) {
  detail::check_bounds(EnumClass::bicyclic, n, limits);
  EnumerationLimits wide = limits;
  wide.tree = std::max(wide.tree, n);
  const auto trees = gen_trees(n, wide, threads);
  return detail::values(detail::collect_parallel(trees, threads, [](const Graph& t, detail::KeyedGraphs& sink) {
    const auto extra = detail::non_edges(t);
    for (std::size_t i = 0; i < extra.size(); ++i) {
      const auto once = t.with_edge(extra[i].u, extra[i].v);
      for (std::size_t j = i + 1; j < extra.size(); ++j) detail::insert_canonical(sink, once.with_edge(extra[j].u, extra[j].v));
    }
  }));
}

/// Trees of order n with a perfect matching.
inline std::vector<Graph> gen_conjugated_trees(int n, const EnumerationLimits& limits = {}, unsigned threads = 1) {
  detail::check_bounds(EnumClass::conjugated_tree, n, limits);
  EnumerationLimits wide = limits;
  wide.tree = std::max(wide.tree, n);
  auto trees = gen_trees(n, wide, threads);
  std::erase_if(trees, [](const Graph& t) { return !is_conjugated(t); });
  return trees;
}

inline std::vector<Graph> gen_class(EnumClass c, int n, const EnumerationLimits& limits = {}, unsigned threads = 1) {
  switch (c) {
    case EnumClass::tree: return gen_trees(n, limits, threads);
    case EnumClass::unicyclic: return gen_unicyclic(n, limits, threads);
    case EnumClass::bicyclic: return gen_bicyclic(n, limits, threads);
    case EnumClass::conjugated_tree: return gen_conjugated_trees(n, limits, threads);
  }
  return {};
}

struct ExtremalReport {
  EnumClass cls = EnumClass::tree;
  int n = 0;
  std::size_t count = 0;
  std::int64_t min_tau = 0;
  std::int64_t max_tau = 0;
  std::vector<CanonicalKey> min_witnesses;
  std::vector<CanonicalKey> max_witnesses;

  bool min_witnessed_by(const Graph& g) const {
    return std::binary_search(min_witnesses.begin(), min_witnesses.end(), canonical_key(g));
  }
  bool max_witnessed_by(const Graph& g) const {
    return std::binary_search(max_witnesses.begin(), max_witnesses.end(), canonical_key(g));
  }
};

/// Exact min/max of tau over `graphs` with every witness (sorted keys).
inline ExtremalReport summarize(EnumClass c, int n, std::span<const Graph> graphs) {
  ExtremalReport r;
  r.cls = c;
  r.n = n;
  r.count = graphs.size();
  if (graphs.empty()) return r;
  std::vector<std::int64_t> taus;
  taus.reserve(graphs.size());
  for (const auto& g : graphs) taus.push_back(tau(g));
  r.min_tau = *std::min_element(taus.begin(), taus.end());
  r.max_tau = *std::max_element(taus.begin(), taus.end());
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    if (taus[i] == r.min_tau) r.min_witnesses.push_back(canonical_key(graphs[i]));
    if (taus[i] == r.max_tau) r.max_witnesses.push_back(canonical_key(graphs[i]));
  }
  std::sort(r.min_witnesses.begin(), r.min_witnesses.end());
  std::sort(r.max_witnesses.begin(), r.max_witnesses.end());
  return r;
}

inline ExtremalReport extremal_scan(EnumClass c, int n, const EnumerationLimits& limits = {}, unsigned threads = 1) {
  const auto graphs = gen_class(c, n, limits, threads);
  return summarize(c, n, graphs);
}

inline void write_report_csv_header(std::ostream& out) {
  out << "class,n,count,min_tau,max_tau,min_witnesses,max_witnesses\n";
}

inline void write_report_csv_row(std::ostream& out, const ExtremalReport& r) {
  out << to_string(r.cls) << ',' << r.n << ',' << r.count << ',' << r.min_tau << ',' << r.max_tau << ','
      << r.min_witnesses.size() << ',' << r.max_witnesses.size() << '\n';
}

}  // namespace taugraph
