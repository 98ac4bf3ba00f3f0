#pragma once

// Exhaustive checks of the extremal results, family identities and the
// library's own invariants. Each check takes explicit order ranges so the
// CLI (configurable bounds) and the acceptance suite (fixed ranges) share
// one implementation.

#include <bit>
#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "taugraph/canonical.hpp"
#include "taugraph/enumerate.hpp"
#include "taugraph/families.hpp"
#include "taugraph/graph.hpp"
#include "taugraph/matching.hpp"
#include "taugraph/metrics.hpp"
#include "taugraph/oracle.hpp"
#include "taugraph/rewrite.hpp"

namespace taugraph {

struct CheckResult {
  std::string name;
  bool passed = true;
  std::size_t cases = 0;
  std::vector<std::string> failures;  // first few only
  std::size_t failure_count = 0;
  std::string note;
  double seconds = 0;
};

namespace detail {

class Check {
 public:
  explicit Check(std::string name) { r_.name = std::move(name); }

  bool expect(bool ok, const std::string& what) {
    ++r_.cases;
    if (!ok) {
      r_.passed = false;
      if (r_.failures.size() < 8) r_.failures.push_back(what);
      ++r_.failure_count;
    }
    return ok;
  }

  void note(std::string s) { r_.note = std::move(s); }
  CheckResult result() && { return std::move(r_); }

 private:
  CheckResult r_;
};

inline std::string str(std::int64_t v) { return std::to_string(v); }

}  // namespace detail

/// Memoised enumeration shared by the checks of one run.
class Corpus {
 public:
  explicit Corpus(unsigned threads = 1) : threads_(threads) {}

  const std::vector<Graph>& get(EnumClass c, int n) {
    auto [it, fresh] = cache_.try_emplace({c, n});
    if (fresh) {
      const bool in_range = n >= min_order(c) && n <= kMaxEnumerationOrder &&
                            !(c == EnumClass::conjugated_tree && n % 2 != 0);
      if (in_range) {
        const int cap = kMaxEnumerationOrder;
        it->second = gen_class(c, n, EnumerationLimits{cap, cap, cap, cap}, threads_);
      }
    }
    return it->second;
  }

  unsigned threads() const { return threads_; }

 private:
  unsigned threads_;
  std::map<std::pair<EnumClass, int>, std::vector<Graph>> cache_;
};

/// Every valid family member of order <= max_order, each k for the
/// two-parameter families.
inline std::vector<FamilySpec> valid_specs(int max_order) {
  std::vector<FamilySpec> out;
  for (auto id : kAllFamilies) {
    for (int n = 1; n <= max_order; ++n) {
      if (!takes_k(id)) {
        if (!range_violation({id, n, 0})) out.push_back({id, n, 0});
        continue;
      }
      for (int k = 1; k < n; ++k)
        if (!range_violation({id, n, k})) out.push_back({id, n, k});
    }
  }
  return out;
}

/// Builder that returns a wrong graph for U2 (the cycle C_n), for
/// exercising failure reporting.
inline Graph corrupted_u2(const FamilySpec& spec) {
  if (spec.id == FamilyId::U2) return construct({FamilyId::cycle, spec.n, 0});
  return construct(spec);
}

inline CheckResult check_closed_forms(int max_order, const FamilyBuilder& build = construct) {
  detail::Check c("closed-form concordance");
  for (const auto& spec : valid_specs(max_order)) {
    const auto g = build(spec);
    const auto cf = closed_form_tau(spec);
    const auto t = tau(g);
    c.expect(cf.value == Rational(t), to_string(spec) + ": BFS tau " + detail::str(t) + " vs formula " + to_string(cf.value));
    c.expect(oracle::tau(g) == t, to_string(spec) + ": Floyd-Warshall tau disagrees with BFS");
  }
  return std::move(c).result();
}

/// The published cycle display and U2 corollary disagree with the
/// eccentricity definition; the corrected forms agree.
inline CheckResult check_documented_discrepancies(int max_order, const FamilyBuilder& build = construct) {
  detail::Check c("documented discrepancies (cycle, U2)");
  for (int n = 3; n <= max_order; ++n) {
    const auto cf = closed_form_tau({FamilyId::cycle, n, 0});
    const auto t = tau(build({FamilyId::cycle, n, 0}));
    c.expect(cf.paper_value != Rational(t), "cycle n=" + std::to_string(n) + ": published display unexpectedly matches BFS");
    c.expect(Rational(t) == Rational(n * (n / 2)), "cycle n=" + std::to_string(n) + ": tau " + detail::str(t) + " != n*floor(n/2)");
    c.expect(cf.status == ClosedFormStatus::paper_discrepancy, "cycle n=" + std::to_string(n) + ": not flagged");
  }
  for (int n = 4; n <= max_order; ++n) {
    const auto cf = closed_form_tau({FamilyId::U2, n, 0});
    const auto t = tau(build({FamilyId::U2, n, 0}));
    c.expect(cf.paper_value != Rational(t), "U2 n=" + std::to_string(n) + ": corollary unexpectedly matches BFS");
    c.expect(Rational(t) == detail::path_tau(n - 1) + (n - 2),
             "U2 n=" + std::to_string(n) + ": tau " + detail::str(t) + " != tau(P_{n-1}) + n - 2");
    c.expect(cf.status == ClosedFormStatus::paper_discrepancy, "U2 n=" + std::to_string(n) + ": not flagged");
  }
  return std::move(c).result();
}

inline CheckResult check_family_identities(int max_order, const FamilyBuilder& build = construct) {
  detail::Check c("family identities");
  for (const auto& spec : valid_specs(max_order)) {
    try {
      family_identities(spec, build);
      c.expect(true, "");
    } catch (const FamilyIdentityError& e) {
      c.expect(false, e.what());
    }
  }
  return std::move(c).result();
}

inline CheckResult check_tree_extremality(Corpus& corpus, int lo, int hi, const FamilyBuilder& build = construct) {
  detail::Check c("tree extremality");
  for (int n = std::max(lo, 4); n <= hi; ++n) {
    const auto r = summarize(EnumClass::tree, n, corpus.get(EnumClass::tree, n));
    const auto tag = "n=" + std::to_string(n) + ": ";
    c.expect(r.min_tau == 2 * n - 1, tag + "min tau " + detail::str(r.min_tau) + " != 2n-1");
    c.expect(r.min_witnessed_by(build({FamilyId::star, n, 0})), tag + "star is not a minimiser");
    c.expect(Rational(r.max_tau) == detail::path_tau(n), tag + "max tau " + detail::str(r.max_tau) + " != tau(P_n)");
    c.expect(r.max_witnessed_by(build({FamilyId::path, n, 0})), tag + "path is not a maximiser");
  }
  return std::move(c).result();
}

inline CheckResult check_unicyclic_extremality(Corpus& corpus, int lo, int hi, const FamilyBuilder& build = construct) {
  detail::Check c("unicyclic extremality");
  for (int n = std::max(lo, 4); n <= hi; ++n) {
    const auto r = summarize(EnumClass::unicyclic, n, corpus.get(EnumClass::unicyclic, n));
    const auto tag = "n=" + std::to_string(n) + ": ";
    c.expect(r.min_tau == 2 * n - 1, tag + "min tau " + detail::str(r.min_tau) + " != 2n-1");
    c.expect(r.min_witnessed_by(build({FamilyId::U1, n, 0})), tag + "U1 is not a minimiser");
    const auto u2 = build({FamilyId::U2, n, 0});
    const auto expect = detail::path_tau(n - 1) + (n - 2);
    c.expect(Rational(r.max_tau) == expect,
             tag + "max tau " + detail::str(r.max_tau) + " != tau(P_{n-1}) + n - 2 = " + to_string(expect));
    c.expect(r.max_witnessed_by(u2), tag + "U2 (tau " + detail::str(tau(u2)) + ") is not a maximiser");
  }
  return std::move(c).result();
}

/// At n = 4 the cycle C4 (tau 8) beats U2 (tau 7): the unicyclic maximum
/// theorem needs n >= 5. Confirms the counterexample is still there.
inline CheckResult check_unicyclic_order4_exception(Corpus& corpus, const FamilyBuilder& build = construct) {
  detail::Check c("unicyclic n=4 exception (C4 beats U2)");
  const auto r = summarize(EnumClass::unicyclic, 4, corpus.get(EnumClass::unicyclic, 4));
  const auto c4 = build({FamilyId::cycle, 4, 0});
  const auto u2 = build({FamilyId::U2, 4, 0});
  c.expect(r.max_tau == 8 && r.max_witnesses.size() == 1 && r.max_witnessed_by(c4),
           "max over unicyclic n=4 is " + detail::str(r.max_tau) + ", expected C4 alone with 8");
  c.expect(tau(u2) == 7, "tau(U2(4)) = " + detail::str(tau(u2)) + ", expected 7");
  return std::move(c).result();
}

inline CheckResult check_bicyclic_extremality(Corpus& corpus, int lo, int hi, const FamilyBuilder& build = construct) {
  detail::Check c("bicyclic extremality");
  for (int n = std::max(lo, 5); n <= hi; ++n) {
    const auto& graphs = corpus.get(EnumClass::bicyclic, n);
    const auto r = summarize(EnumClass::bicyclic, n, graphs);
    const auto tag = "n=" + std::to_string(n) + ": ";
    c.expect(r.min_tau == 2 * n - 1, tag + "min tau " + detail::str(r.min_tau) + " != 2n-1");
    c.expect(r.min_witnessed_by(build({FamilyId::B1, n, 0})), tag + "B1 is not a minimiser");
    c.expect(r.min_witnessed_by(build({FamilyId::B1prime, n, 0})), tag + "B1prime is not a minimiser");
    const auto formula = closed_form_tau({FamilyId::B2prime, n, 0}).value;
    c.expect(Rational(r.max_tau) == formula, tag + "max tau " + detail::str(r.max_tau) + " != " + to_string(formula));
    c.expect(r.max_witnessed_by(build({FamilyId::B2prime, n, 0})), tag + "B2prime is not a maximiser");

    std::vector<Graph> two_cycles;
    for (const auto& g : graphs)
      if (simple_cycles(g).size() == 2) two_cycles.push_back(g);
    const auto r2 = summarize(EnumClass::bicyclic, n, two_cycles);
    const auto b2 = build({FamilyId::B2, n, 0});
    c.expect(r2.max_witnessed_by(b2) && r2.max_tau == tau(b2),
             tag + "B2 (tau " + detail::str(tau(b2)) + ") is not maximal among two-cycle graphs (max " + detail::str(r2.max_tau) + ")");
  }
  return std::move(c).result();
}

inline CheckResult check_conjugated_extremality(Corpus& corpus, int lo, int hi, const FamilyBuilder& build = construct) {
  detail::Check c("conjugated-tree extremality");
  for (int n = std::max(lo, 6); n <= hi; ++n) {
    if (n % 2 != 0) continue;
    const auto& trees = corpus.get(EnumClass::conjugated_tree, n);
    const auto r = summarize(EnumClass::conjugated_tree, n, trees);
    const auto tag = "n=" + std::to_string(n) + ": ";
    c.expect(r.min_tau == 7 * n / 2 - 2, tag + "min tau " + detail::str(r.min_tau) + " != 7n/2-2");
    c.expect(r.min_witnesses.size() == 1 && r.min_witnessed_by(build({FamilyId::S_star, n, 0})),
             tag + "S_star is not the unique minimiser");
    c.expect(r.max_witnessed_by(build({FamilyId::path, n, 0})), tag + "path is not a maximiser");
    for (const auto& t : trees) {
      const auto p = pendant_vertices(t).size();
      c.expect(2 * p <= static_cast<std::size_t>(n), tag + describe(t) + " has " + std::to_string(p) + " pendants");
    }
  }
  return std::move(c).result();
}

namespace detail {

inline std::vector<Graph> half_pendant_trees(Corpus& corpus, int n) {
  std::vector<Graph> out;
  for (const auto& t : corpus.get(EnumClass::conjugated_tree, n))
    if (2 * pendant_vertices(t).size() == static_cast<std::size_t>(n)) out.push_back(t);
  return out;
}

}  // namespace detail

/// The claim that S_star is the only conjugated tree with n/2 pendants,
/// checked as stated.
inline CheckResult check_half_pendant_uniqueness(Corpus& corpus, int lo, int hi, const FamilyBuilder& build = construct) {
  detail::Check c("conjugated tree with n/2 pendants is S_star");
  for (int n = std::max(lo, 6); n <= hi; ++n) {
    if (n % 2 != 0) continue;
    const auto found = detail::half_pendant_trees(corpus, n);
    const auto s = build({FamilyId::S_star, n, 0});
    std::size_t others = 0;
    for (const auto& t : found) others += isomorphic(t, s) ? 0 : 1;
    c.expect(found.size() == 1 && others == 0, "n=" + std::to_string(n) + ": " + std::to_string(found.size()) +
                                                   " trees with n/2 pendants, " + std::to_string(others) + " not S_star" +
                                                   (others > 0 ? " (e.g. " + describe(found.back()) + ")" : ""));
  }
  return std::move(c).result();
}

/// What does hold: a conjugated tree with n/2 pendants is a tree on n/2
/// vertices with one pendant hung on every vertex, every such tree occurs,
/// and S_star (the star case) is one of them. From n = 8 there are others,
/// e.g. the comb over P_{n/2}.
inline CheckResult check_half_pendant_structure(Corpus& corpus, int lo, int hi, const FamilyBuilder& build = construct) {
  detail::Check c("conjugated trees with n/2 pendants are coronas");
  std::string counts;
  for (int n = std::max(lo, 6); n <= hi; ++n) {
    if (n % 2 != 0) continue;
    const auto tag = "n=" + std::to_string(n) + ": ";
    const auto found = detail::half_pendant_trees(corpus, n);
    std::set<CanonicalKey> cores;
    bool has_star_case = false;
    for (const auto& t : found) {
      has_star_case |= isomorphic(t, build({FamilyId::S_star, n, 0}));
      const auto leaves = pendant_vertices(t);
      std::uint64_t leaf_mask = 0;
      for (auto v : leaves) leaf_mask |= detail::bit(v);
      bool corona = true;
      for (Vertex v = 0; v < t.order(); ++v)
        if (!(leaf_mask & detail::bit(v))) corona &= std::popcount(t.neighbor_mask(v) & leaf_mask) == 1;
      c.expect(corona, tag + describe(t) + " is not a corona");
      auto core = t;
      for (auto it = leaves.rbegin(); it != leaves.rend(); ++it) core = core.without_vertex(*it);
      cores.insert(tree_key(core));
    }
    std::set<CanonicalKey> all_half;
    for (const auto& t : corpus.get(EnumClass::tree, n / 2)) all_half.insert(tree_key(t));
    c.expect(cores == all_half, tag + std::to_string(cores.size()) + " cores vs " + std::to_string(all_half.size()) +
                                    " trees of order n/2");
    c.expect(has_star_case, tag + "S_star missing");
    if (n >= 8) {
      auto comb = build({FamilyId::path, n / 2, 0}).edges();
      for (int i = 0; i < n / 2; ++i) comb.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(n / 2 + i));
      const auto g = Graph::from_edges(static_cast<std::size_t>(n), comb);
      bool seen = false;
      for (const auto& t : found) seen |= isomorphic(t, g);
      c.expect(seen && found.size() > 1, tag + "comb counterexample to uniqueness not found");
    }
    counts += (counts.empty() ? "" : ", ") + std::to_string(n) + ":" + std::to_string(found.size());
  }
  if (!counts.empty()) c.note("trees with n/2 pendants per n " + counts);
  return std::move(c).result();
}

/// Algorithms 1 and 2 on every tree of order tree_lo..tree_hi, Algorithm 3
/// on every conjugated tree of even order 4..conj_hi.
inline CheckResult check_rewrites(Corpus& corpus, int tree_lo, int tree_hi, int conj_hi,
                                  const FamilyBuilder& build = construct) {
  detail::Check c("rewrite correctness and monotonicity");
  auto run = [&](int alg, const Graph& t, const Graph& target, const std::string& target_name) {
    const auto tag = "alg" + std::to_string(alg) + " on " + describe(t) + ": ";
    try {
      const auto trace = run_algorithm(alg, t);
      c.expect(isomorphic(trace.final_graph, target), tag + "did not end at " + target_name);
      for (const auto& v : trace_violations(trace)) c.expect(false, tag + v);
    } catch (const std::exception& e) {
      c.expect(false, tag + e.what());
    }
  };
  for (int n = std::max(tree_lo, 4); n <= tree_hi; ++n) {
    const auto path = build({FamilyId::path, n, 0});
    const auto star = build({FamilyId::star, n, 0});
    for (const auto& t : corpus.get(EnumClass::tree, n)) {
      run(1, t, path, "P_n");
      run(2, t, star, "S_n");
    }
  }
  for (int n = 4; n <= conj_hi; n += 2) {
    // S_* of order 4 is P4 (S_{5,2} is P5).
    const auto target = n >= 6 ? build({FamilyId::S_star, n, 0}) : build({FamilyId::path, 4, 0});
    for (const auto& t : corpus.get(EnumClass::conjugated_tree, n)) run(3, t, target, "S_star");
  }
  return std::move(c).result();
}

/// All shortest paths between pairs at distance diam.
inline std::vector<Path> all_diametrical_paths(const Graph& g) {
  const auto p = ecc_profile(g);
  const auto d = distance_matrix(g);
  std::vector<Path> out;
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v)
      if (d[u][v] == p.diam) {
        auto paths = shortest_paths(g, u, v);
        out.insert(out.end(), paths.begin(), paths.end());
      }
  return out;
}

inline CheckResult check_structural_lemmas(Corpus& corpus, int tree_hi, int cyclic_hi, const FamilyBuilder& build = construct) {
  detail::Check c("structural lemmas");
  for (int n = 1; n <= tree_hi; ++n) {
    for (const auto& t : corpus.get(EnumClass::tree, n)) {
      const auto key = describe(t);
      const auto p = ecc_profile(t);
      const auto d = distance_matrix(t);
      // Eccentric-endpoint dominance for every diametrical pair.
      for (Vertex u = 0; u < t.order(); ++u)
        for (Vertex v = u + 1; v < t.order(); ++v) {
          if (d[u][v] != p.diam) continue;
          for (Vertex x = 0; x < t.order(); ++x)
            c.expect(std::max(d[x][u], d[x][v]) == p.ecc[x],
                     key + ": neither " + std::to_string(u) + " nor " + std::to_string(v) + " is eccentric to " + std::to_string(x));
        }
      const auto centre = p.center.size();
      c.expect(centre == 1 || centre == 2, key + ": centre has " + std::to_string(centre) + " vertices");
      c.expect(centre != 1 || p.diam == 2 * p.rad, key + ": one central vertex but diam != 2 rad");
      c.expect(centre != 2 || p.diam + 1 == 2 * p.rad, key + ": central edge but diam != 2 rad - 1");
      for (const auto& path : all_diametrical_paths(t)) {
        bool has_centre = false;
        for (auto v : path.vertices) has_centre |= p.ecc[v] == p.rad;
        c.expect(has_centre, key + ": diametrical path misses the centre");
      }
      if (n >= 4) {
        bool ds = false;
        for (int k = 2; k <= n - 2 && !ds; ++k) ds = isomorphic(t, build({FamilyId::double_star, n, k}));
        c.expect((p.diam == 3) == ds, key + ": diameter-3 / double-star mismatch");
      }
    }
  }
  for (auto cls : {EnumClass::tree, EnumClass::unicyclic, EnumClass::bicyclic}) {
    const int hi = cls == EnumClass::tree ? tree_hi : cyclic_hi;
    for (int n = 1; n <= hi; ++n)
      for (const auto& g : corpus.get(cls, n)) {
        const auto p = ecc_profile(g);
        c.expect(p.rad <= p.diam && p.diam <= 2 * p.rad, describe(g) + ": rad/diam out of order");
      }
  }
  for (auto cls : {EnumClass::unicyclic, EnumClass::bicyclic}) {
    for (int n = 1; n <= cyclic_hi; ++n)
      for (const auto& g : corpus.get(cls, n)) {
        const auto paths = all_diametrical_paths(g);
        for (const auto& cycle : simple_cycles(g)) {
          const auto k = cycle.size();
          std::uint64_t on_cycle = 0;
          for (auto v : cycle) on_cycle |= detail::bit(v);
          auto cycle_edge = [&](Vertex a, Vertex b) {
            for (std::size_t i = 0; i < k; ++i)
              if (Edge(cycle[i], cycle[(i + 1) % k]) == Edge(a, b)) return true;
            return false;
          };
          for (const auto& path : paths) {
            std::size_t verts = 0, edges = 0;
            for (std::size_t i = 0; i < path.vertices.size(); ++i) {
              if (on_cycle & detail::bit(path.vertices[i])) ++verts;
              if (i > 0 && cycle_edge(path.vertices[i - 1], path.vertices[i])) ++edges;
            }
            c.expect(verts <= k / 2 + 1 && edges <= k / 2,
                     describe(g) + ": diametrical path shares " + std::to_string(verts) + " vertices with a " +
                         std::to_string(k) + "-cycle");
          }
        }
      }
  }
  return std::move(c).result();
}

inline CheckResult check_bounds(Corpus& corpus, const EnumerationLimits& hi) {
  detail::Check c("extremal bounds on every enumerated graph");
  // Each bound is stated from the first order where the class is not a
  // single complete-like graph (P2, C3, K4 - e fall below 2n - 1).
  for (int n = 3; n <= hi.tree; ++n)
    for (const auto& t : corpus.get(EnumClass::tree, n)) {
      const auto v = tau(t);
      c.expect(Rational(v) <= Rational(3 * n * n, 4) - Rational(n, 2) && v >= 2 * n - 1,
               "tree " + describe(t) + ": tau " + detail::str(v) + " outside [2n-1, 3n^2/4 - n/2]");
    }
  for (int n = 4; n <= hi.unicyclic; ++n)
    for (const auto& g : corpus.get(EnumClass::unicyclic, n))
      c.expect(tau(g) >= 2 * n - 1, "unicyclic " + describe(g) + ": tau below 2n-1");
  for (int n = 5; n <= hi.bicyclic; ++n) {
    const Rational upper = Rational(3 * n * n, 4) - n - (n % 2 == 0 ? Rational(2) : Rational(7, 4));
    for (const auto& g : corpus.get(EnumClass::bicyclic, n)) {
      const auto v = tau(g);
      c.expect(v >= 2 * n - 1 && Rational(v) <= upper,
               "bicyclic " + describe(g) + ": tau " + detail::str(v) + " outside [2n-1, " + to_string(upper) + "]");
    }
  }
  for (int n = 6; n <= hi.conjugated; n += 2)
    for (const auto& t : corpus.get(EnumClass::conjugated_tree, n))
      c.expect(2 * tau(t) >= 7 * n - 4, "conjugated tree " + describe(t) + ": tau below 7n/2-2");
  return std::move(c).result();
}

/// Leaf peeling gives the same answer under shuffled priorities and agrees
/// with brute-force matching search.
inline CheckResult check_matchings(Corpus& corpus, int tree_hi, std::uint32_t seed = 20240601) {
  detail::Check c("perfect matchings of trees");
  std::mt19937 rng(seed);
  for (int n = 1; n <= tree_hi; ++n)
    for (const auto& t : corpus.get(EnumClass::tree, n)) {
      const auto base = tree_perfect_matching(t);
      c.expect(base.has_value() == oracle::has_perfect_matching(t), describe(t) + ": leaf peeling disagrees with search");
      if (base) c.expect(is_perfect_matching(t, base->edges), describe(t) + ": result is not a perfect matching");
      std::vector<Vertex> order(t.order());
      std::iota(order.begin(), order.end(), Vertex{0});
      for (int trial = 0; trial < 4; ++trial) {
        std::shuffle(order.begin(), order.end(), rng);
        c.expect(tree_perfect_matching(t, order) == base, describe(t) + ": matching depends on leaf order");
      }
    }
  return std::move(c).result();
}

inline CheckResult check_regular_identity(int max_n) {
  detail::Check c("k-regular identity tau = xi/k");
  for (int n = 2; n <= std::min(max_n, 8); ++n)
    for (int k = 1; k < n; ++k) {
      std::set<CanonicalKey> seen;
      oracle::for_each_labeled_regular(n, k, [&](const Graph& g) {
        if (!is_connected(g) || !seen.insert(canonical_key(g)).second) return;
        c.expect(regular_degree(g) == static_cast<std::size_t>(k) && xi(g) == k * tau(g),
                 describe(g) + ": xi " + detail::str(xi(g)) + " != " + std::to_string(k) + " * tau");
      });
    }
  return std::move(c).result();
}

/// Library distances, eccentricities and tau against Floyd-Warshall.
inline CheckResult check_metric_oracle(Corpus& corpus, int max_n) {
  detail::Check c("BFS metrics against Floyd-Warshall");
  for (auto cls : {EnumClass::tree, EnumClass::unicyclic, EnumClass::bicyclic})
    for (int n = 1; n <= max_n; ++n)
      for (const auto& g : corpus.get(cls, n)) {
        const auto fw = oracle::floyd_warshall(g);
        c.expect(distance_matrix(g) == fw, describe(g) + ": distance matrix mismatch");
        const auto ecc = oracle::eccentricities(g);
        c.expect(ecc_profile(g).ecc == ecc && tau(g) == oracle::tau(g), describe(g) + ": eccentricity mismatch");
      }
  return std::move(c).result();
}

/// Canonical keys survive random relabelling; generators agree with the
/// labelled-graph filter; the tree generator agrees with Pruefer
/// enumeration.
inline CheckResult check_canonicalization(Corpus& corpus, int relabel_max_n, std::size_t samples, int filter_max_n,
                                          int prufer_max_n, std::uint32_t seed = 7) {
  detail::Check c("canonicalization soundness");
  std::vector<Graph> pool;
  for (auto cls : {EnumClass::tree, EnumClass::unicyclic, EnumClass::bicyclic})
    for (int n = 2; n <= relabel_max_n; ++n)
      for (const auto& g : corpus.get(cls, n)) pool.push_back(g);
  std::mt19937 rng(seed);
  for (std::size_t i = 0; i < samples && !pool.empty(); ++i) {
    const auto& g = pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)];
    std::vector<Vertex> perm(g.order());
    std::iota(perm.begin(), perm.end(), Vertex{0});
    std::shuffle(perm.begin(), perm.end(), rng);
    const auto h = g.relabeled(perm);
    c.expect(canonical_key(h) == canonical_key(g), describe(g) + ": key changed under relabelling");
    if (is_tree(g)) c.expect(tree_key(h) == tree_key(g), describe(g) + ": tree key changed under relabelling");
  }

  const std::pair<EnumClass, int> classes[] = {{EnumClass::tree, -1}, {EnumClass::unicyclic, 0}, {EnumClass::bicyclic, 1}};
  for (int n = 1; n <= filter_max_n; ++n)
    for (const auto& [cls, extra] : classes) {
      if (n < min_order(cls)) continue;
      const auto& gen = corpus.get(cls, n);
      std::set<oracle::BruteKey> ours;
      for (const auto& g : gen) ours.insert(oracle::brute_force_key(g));
      const auto m = static_cast<std::size_t>(n + extra);
      auto expected = oracle::connected_classes(n, m);
      if (n == 1) expected.insert(oracle::brute_force_key(Graph(1)));
      c.expect(ours.size() == gen.size(), std::string(to_string(cls)) + " n=" + std::to_string(n) + ": generator emitted isomorphic duplicates");
      c.expect(ours == expected, std::string(to_string(cls)) + " n=" + std::to_string(n) + ": " + std::to_string(gen.size()) +
                                     " generated vs " + std::to_string(expected.size()) + " from the filter oracle");
    }

  for (int n = 2; n <= prufer_max_n; ++n) {
    std::set<CanonicalKey> labelled;
    oracle::for_each_labeled_tree(n, [&](const Graph& t) { labelled.insert(tree_key(t)); });
    std::set<CanonicalKey> generated;
    for (const auto& t : corpus.get(EnumClass::tree, n)) generated.insert(tree_key(t));
    c.expect(labelled == generated, "trees n=" + std::to_string(n) + ": " + std::to_string(generated.size()) +
                                        " generated vs " + std::to_string(labelled.size()) + " from Pruefer sequences");
  }
  return std::move(c).result();
}

struct VerifyOptions {
  EnumerationLimits limits;
  int family_max_order = 20;
  unsigned threads = 1;
  FamilyBuilder build = construct;
};

/// Runs every check within the configured bounds, in a fixed order.
inline std::vector<CheckResult> run_verification(const VerifyOptions& opt) {
  Corpus corpus(opt.threads);
  const auto& L = opt.limits;
  const int small = std::min({L.tree, L.unicyclic, L.bicyclic});
  std::vector<std::function<CheckResult()>> checks = {
      [&] { return check_closed_forms(opt.family_max_order, opt.build); },
      [&] { return check_documented_discrepancies(opt.family_max_order, opt.build); },
      [&] { return check_family_identities(opt.family_max_order, opt.build); },
      [&] { return check_tree_extremality(corpus, 4, L.tree, opt.build); },
      [&] { return check_unicyclic_extremality(corpus, 5, L.unicyclic, opt.build); },
      [&] { return check_bicyclic_extremality(corpus, 5, L.bicyclic, opt.build); },
      [&] { return check_conjugated_extremality(corpus, 6, L.conjugated, opt.build); },
      [&] { return check_half_pendant_structure(corpus, 6, L.conjugated, opt.build); },
      [&] { return check_bounds(corpus, L); },
      [&] { return check_rewrites(corpus, 4, std::min(L.tree, 10), std::min(L.conjugated, 12), opt.build); },
      [&] { return check_structural_lemmas(corpus, L.tree, std::min(L.unicyclic, L.bicyclic), opt.build); },
      [&] { return check_matchings(corpus, L.tree); },
      [&] { return check_regular_identity(std::min(small, 8)); },
      [&] { return check_metric_oracle(corpus, std::min(small, 8)); },
      [&] { return check_canonicalization(corpus, std::min(small, 8), 1000, std::min(small, 6), std::min(L.tree, 8)); },
  };
  if (L.unicyclic >= 4) checks.insert(checks.begin() + 5, [&] { return check_unicyclic_order4_exception(corpus, opt.build); });

  std::vector<CheckResult> out;
  for (const auto& run : checks) {
    const auto start = std::chrono::steady_clock::now();
    auto r = run();
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out.push_back(std::move(r));
  }
  return out;
}

/// One line per check, failures indented beneath. Contains no timings so
/// the report is reproducible.
inline void write_verification_report(std::ostream& out, const std::vector<CheckResult>& results) {
  std::size_t failed = 0;
  for (const auto& r : results) {
    out << (r.passed ? "PASS  " : "FAIL  ") << r.name << " (" << r.cases << " cases)";
    if (!r.note.empty()) out << " - " << r.note;
    out << '\n';
    for (const auto& f : r.failures) out << "      " << f << '\n';
    if (r.failure_count > r.failures.size()) out << "      ... " << r.failure_count - r.failures.size() << " more\n";
    failed += r.passed ? 0 : 1;
  }
  out << results.size() - failed << " of " << results.size() << " checks passed\n";
}

}  // namespace taugraph
