#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <boost/rational.hpp>

#include "taugraph/family_spec.hpp"
#include "taugraph/graph.hpp"

namespace taugraph {

using Rational = boost::rational<std::int64_t>;

/// "p/q", or "p" when the denominator is one.
inline std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

/// Total-eccentricity index: the sum of all vertex eccentricities.
inline std::int64_t tau(const Graph& g) {
  if (g.order() == 0) throw DisconnectedGraph();
  std::int64_t sum = 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    auto e = eccentricity(g, v);
    if (!e) throw DisconnectedGraph();
    sum += *e;
  }
  return sum;
}

/// Average eccentricity tau / n, exact.
inline Rational avec(const Graph& g) {
  return Rational(tau(g), static_cast<std::int64_t>(g.order()));
}

/// Eccentric connectivity index: sum of deg(v) * ecc(v).
inline std::int64_t xi(const Graph& g) {
  if (g.order() == 0) throw DisconnectedGraph();
  std::int64_t sum = 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    auto e = eccentricity(g, v);
    if (!e) throw DisconnectedGraph();
    sum += static_cast<std::int64_t>(g.degree(v)) * *e;
  }
  return sum;
}

struct IndexReport {
  std::size_t n = 0;
  std::size_t m = 0;
  std::int64_t tau = 0;
  Rational avec;
  std::int64_t xi = 0;
  unsigned rad = 0;
  unsigned diam = 0;
};

inline IndexReport index_report(const Graph& g) {
  const auto p = ecc_profile(g);
  IndexReport r;
  r.n = g.order();
  r.m = g.size();
  for (Vertex v = 0; v < g.order(); ++v) {
    r.tau += p.ecc[v];
    r.xi += static_cast<std::int64_t>(g.degree(v)) * p.ecc[v];
  }
  r.avec = Rational(r.tau, static_cast<std::int64_t>(r.n));
  r.rad = p.rad;
  r.diam = p.diam;
  return r;
}

/// Regularity degree, or nullopt if degrees differ.
inline std::optional<std::size_t> regular_degree(const Graph& g) {
  if (g.order() == 0) return std::nullopt;
  const auto k = g.degree(0);
  for (Vertex v = 1; v < g.order(); ++v) {
    if (g.degree(v) != k) return std::nullopt;
  }
  return k;
}

enum class ClosedFormStatus { matches_paper, paper_discrepancy };

inline std::string to_string(ClosedFormStatus s) {
  return s == ClosedFormStatus::matches_paper ? "matches-paper" : "paper-discrepancy";
}

/// Closed-form tau for a family member. `value` always agrees with the
/// eccentricity definition; `paper_value` is the reference formula as
/// published. They differ only for cycles and U2.
struct ClosedForm {
  FamilySpec family;
  Rational value;
  Rational paper_value;
  ClosedFormStatus status = ClosedFormStatus::matches_paper;
  std::string note;
};

namespace detail {

/// 3n^2/4 - n/2 (even n), 3n^2/4 - n/2 - 1/4 (odd n).
inline Rational path_tau(std::int64_t n) {
  Rational r = Rational(3 * n * n, 4) - Rational(n, 2);
  if (n % 2 != 0) r -= Rational(1, 4);
  return r;
}

}  // namespace detail

inline ClosedForm closed_form_tau(const FamilySpec& spec) {
  require_valid(spec);
  const std::int64_t n = spec.n;
  ClosedForm cf;
  cf.family = spec;
  switch (spec.id) {
    case FamilyId::path:
      cf.value = detail::path_tau(n);
      break;
    case FamilyId::cycle:
      cf.value = Rational(n * (n / 2));
      cf.paper_value = n % 2 == 0 ? Rational(n, 2) : Rational(n - 1, 2);
      cf.note = "reference display n/2 (even) or (n-1)/2 (odd) is the per-vertex eccentricity; BFS gives tau = n*floor(n/2) = " +
                to_string(cf.value);
      break;
    case FamilyId::star:
    case FamilyId::U1:
    case FamilyId::B1:
    case FamilyId::B1prime:
      cf.value = Rational(2 * n - 1);
      break;
    case FamilyId::complete:
      cf.value = Rational(n);
      break;
    case FamilyId::complete_bipartite:
      // K_{k, n-k}: every vertex has eccentricity 2.
      cf.value = Rational(2 * n);
      break;
    case FamilyId::U2:
      cf.value = detail::path_tau(n - 1) + Rational(n - 2);
      cf.paper_value = Rational(n * (n - 1), 2) - 1;
      cf.note = "reference corollary n(n-1)/2 - 1 = " + to_string(cf.paper_value) +
                " contradicts the pendant-path identity tau(U2) = tau(P_{n-1}) + n - 2 = " + to_string(cf.value);
      break;
    case FamilyId::B2:
      cf.value = Rational(3 * n * n, 4) - Rational(3 * n, 2) - (n % 2 == 0 ? Rational(2) : Rational(9, 4));
      break;
    case FamilyId::B2prime:
      cf.value = Rational(3 * n * n, 4) - Rational(n) - (n % 2 == 0 ? Rational(2) : Rational(7, 4));
      break;
    case FamilyId::subdivided_star:
      cf.value = Rational(7 * n, 2) - Rational(3, 2);
      break;
    case FamilyId::S_star:
      cf.value = Rational(7 * n, 2) - 2;
      break;
    case FamilyId::double_star:
      cf.value = Rational(3 * n - 2);
      break;
  }
  if (spec.id != FamilyId::cycle && spec.id != FamilyId::U2) cf.paper_value = cf.value;
  cf.status = cf.paper_value == cf.value ? ClosedFormStatus::matches_paper : ClosedFormStatus::paper_discrepancy;
  return cf;
}

}  // namespace taugraph
