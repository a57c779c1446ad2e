#pragma once

// Edges of mu0 as the local extrema of z0, located in the chart q = 1/m.

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mpedge/density.hpp"
#include "mpedge/detail/qform.hpp"
#include "mpedge/detail/roots.hpp"
#include "mpedge/error.hpp"
#include "mpedge/population.hpp"
#include "mpedge/spectral.hpp"

namespace mpedge {

enum class EdgeSide { Left, Right };

constexpr const char* to_string(EdgeSide s) { return s == EdgeSide::Left ? "left" : "right"; }

/// One edge E* of mu0 with its m-value, scale and regularity margin.
struct EdgeInfo {
  double e_star = 0.0;
  /// m-value; +inf for a hard edge.
  double m_star = 0.0;
  /// q = 1/m_star (0 for a hard edge).
  double q_star = 0.0;
  /// gamma = sqrt(2/|z0''(m*)|); absent for hard or degenerate edges.
  std::optional<double> gamma;
  /// z0''(m*) (0 for a hard edge).
  double curvature = 0.0;
  /// Geometric side: where the adjacent support interval lies.
  EdgeSide side = EdgeSide::Right;
  /// Side by the local-min/local-max rule in m (min -> right, max -> left).
  EdgeSide extremum_side = EdgeSide::Right;
  bool soft = true;
  double regularity_margin = 0.0;

  bool hard() const { return !soft; }
};

struct SupportInterval {
  double lo = 0.0;
  double hi = 0.0;
};

/// Support of mu0 as disjoint increasing intervals, with edges ordered
/// E_1 > E_2 > ... > E_n.
struct SupportReport {
  std::vector<SupportInterval> intervals;
  std::vector<EdgeInfo> edges;
  double atom_at_zero = 0.0;
  /// 0 lies in S' = {g' < 0}: supp(mu0) contains the isolated point 0.
  bool isolated_zero_flag = false;

  double diameter() const {
    return intervals.empty() ? 0.0 : intervals.back().hi - intervals.front().lo;
  }
  bool contains(double x) const {
    return std::any_of(intervals.begin(), intervals.end(),
                       [x](const SupportInterval& iv) { return x >= iv.lo && x <= iv.hi; });
  }
  double distance_to_support(double x) const {
    double d = std::numeric_limits<double>::infinity();
    for (const auto& iv : intervals) {
      if (x >= iv.lo && x <= iv.hi) return 0.0;
      d = std::min({d, std::abs(x - iv.lo), std::abs(x - iv.hi)});
    }
    return d;
  }
};

/// Denominators below this make the curvature numerically indistinguishable
/// from a merging pair of extrema.
inline constexpr double kDegenerateCurvature = 1e-8;

namespace detail {

/// Regularity margin min(1/|m|, 1/gamma, min_t |m + 1/t|).
inline double regularity_margin(const PopulationSpec& pop, double m, std::optional<double> gamma) {
  if (!gamma || !std::isfinite(m)) return 0.0;
  double margin = std::min(1.0 / std::abs(m), 1.0 / *gamma);
  for (const auto& e : pop.entries())
    if (e.t != 0.0) margin = std::min(margin, std::abs(m + 1.0 / e.t));
  return margin;
}

/// Fills an EdgeInfo for a critical point q of g.
inline EdgeInfo edge_from_q(const PopulationSpec& pop, const QForm& qf, double q) {
  EdgeInfo info;
  info.q_star = q;
  info.e_star = qf.g(q);
  const double g2 = qf.g2(q);
  info.extremum_side = g2 > 0.0 ? EdgeSide::Right : EdgeSide::Left;
  if (q == 0.0) {
    info.soft = false;
    info.m_star = std::numeric_limits<double>::infinity();
    info.e_star = 0.0;
    info.curvature = 0.0;
    info.regularity_margin = 0.0;
    return info;
  }
  info.m_star = 1.0 / q;
  // z0''(m) = g''(q) q^4 where g'(q) = 0.
  info.curvature = z0_derivative_raw(pop, info.m_star, 2);
  if (std::abs(info.curvature) >= kDegenerateCurvature)
    info.gamma = std::sqrt(2.0 / std::abs(info.curvature));
  info.regularity_margin = regularity_margin(pop, info.m_star, info.gamma);
  return info;
}

/// Critical points of g on one pole interval (lo, hi); infinite ends allowed.
inline std::vector<double> critical_points_on(const QForm& qf, double lo, double hi) {
  const auto g1 = [&](double q) { return qf.g1(q); };
  const auto g2 = [&](double q) { return qf.g2(q); };
  const auto g3 = [&](double q) { return qf.g3(q); };
  const double eps = std::numeric_limits<double>::epsilon();

  // A point inside (pole, ...) close enough to the pole that g' > 0 there.
  auto near_pole = [&](double pole, double direction, auto&& positive) {
    double off = std::max(1.0, std::abs(pole)) * 1e-3;
    for (int i = 0; i < 200; ++i) {
      const double q = pole + direction * off;
      if (q != pole && positive(q)) return q;
      off *= 0.5;
      if (off < 4.0 * eps * std::max(1.0, std::abs(pole)))
        fail(ErrorKind::BracketFailure, "could not bracket near pole " + std::to_string(pole));
    }
    fail(ErrorKind::BracketFailure, "near-pole search exhausted");
  };
  auto far_point = [&](double pole, double direction) {
    double off = std::max(1.0, std::abs(pole));
    for (int i = 0; i < 200; ++i) {
      const double q = pole + direction * off;
      if (qf.g1(q) < 0.0) return q;
      off *= 2.0;
    }
    fail(ErrorKind::BracketFailure, "no sign change of g' towards infinity");
  };

  std::vector<double> out;
  const bool lo_inf = std::isinf(lo);
  const bool hi_inf = std::isinf(hi);
  auto positive_g1 = [&](double q) { return qf.g1(q) > 0.0; };
  if (lo_inf && hi_inf) {
    fail(ErrorKind::DegeneratePopulation, "no poles: all diagonal values are zero");
  }
  if (lo_inf) {
    // g' increases from -1 to +inf: exactly one critical point (a minimum).
    const double a = far_point(hi, -1.0);
    const double b = near_pole(hi, -1.0, positive_g1);
    out.push_back(bracketed_newton(g1, g2, a, b));
    return out;
  }
  if (hi_inf) {
    // g' decreases from +inf to -1: exactly one critical point (a maximum).
    const double a = near_pole(lo, +1.0, positive_g1);
    const double b = far_point(lo, +1.0);
    out.push_back(bracketed_newton(g1, g2, a, b));
    return out;
  }
  // Interior: g' convex with +inf at both ends. Its minimiser is the unique
  // root of the increasing function g''.
  const double a = near_pole(lo, +1.0, [&](double q) { return qf.g2(q) < 0.0 && qf.g1(q) > 0.0; });
  const double b = near_pole(hi, -1.0, [&](double q) { return qf.g2(q) > 0.0 && qf.g1(q) > 0.0; });
  const double qmin = bracketed_newton(g2, g3, a, b);
  const double g1min = qf.g1(qmin);
  if (!std::isfinite(g1min)) fail(ErrorKind::BracketFailure, "g' not finite at its minimiser");
  if (g1min > 0.0) return out;
  if (g1min == 0.0) {
    out.push_back(qmin);
    out.push_back(qmin);
    return out;
  }
  out.push_back(bracketed_newton(g1, g2, a, qmin));
  out.push_back(bracketed_newton(g1, g2, qmin, b));
  return out;
}

}  // namespace detail

/// Enumerates all edges of mu0. Each pole interval of g is searched on its
/// own; convexity of g' certifies one critical point on each unbounded
/// interval and zero or two on each bounded one.
inline SupportReport find_edges(const PopulationSpec& pop) {
  if (pop.all_zero()) fail(ErrorKind::DegeneratePopulation, "all diagonal values are zero");
  const detail::QForm qf(pop);
  std::vector<double> poles;
  for (std::size_t j = 0; j < qf.size(); ++j) poles.push_back(-qf.t(j));
  std::sort(poles.begin(), poles.end());

  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> qs;
  for (std::size_t i = 0; i <= poles.size(); ++i) {
    const double lo = i == 0 ? -inf : poles[i - 1];
    const double hi = i == poles.size() ? inf : poles[i];
    auto found = detail::critical_points_on(qf, lo, hi);
    // q = 0 is an exact critical point iff rank(T) = N.
    if (pop.rank() == pop.n_dim() && lo < 0.0 && 0.0 < hi) {
      if (found.empty()) fail(ErrorKind::BracketFailure, "hard-edge critical point at q = 0 not found");
      auto it = std::min_element(found.begin(), found.end(),
                                 [](double a, double b) { return std::abs(a) < std::abs(b); });
      if (std::abs(*it) > 1e-6) fail(ErrorKind::BracketFailure, "critical point near q = 0 did not snap");
      *it = 0.0;
    }
    qs.insert(qs.end(), found.begin(), found.end());
  }
  std::sort(qs.begin(), qs.end());

  SupportReport report;
  report.atom_at_zero = atom_mass_at_zero(pop);
  report.isolated_zero_flag = qf.slope_at_zero() < 0.0;
  for (double q : qs) report.edges.push_back(detail::edge_from_q(pop, qf, q));
  if (report.edges.size() % 2 != 0) fail(ErrorKind::BracketFailure, "odd number of edges");

  // Ordering: increasing q must give strictly decreasing E.
  for (std::size_t j = 1; j < report.edges.size(); ++j) {
    if (!(report.edges[j].e_star < report.edges[j - 1].e_star))
      fail(ErrorKind::BracketFailure, "edge ordering violated between edges " + std::to_string(j) +
                                          " and " + std::to_string(j + 1));
  }
  // Edges alternate right, left, right, ... from the top.
  for (std::size_t j = 0; j < report.edges.size(); ++j) {
    auto& e = report.edges[j];
    e.side = (j % 2 == 0) ? EdgeSide::Right : EdgeSide::Left;
    if (e.soft && e.gamma && e.side != e.extremum_side)
      fail(ErrorKind::BracketFailure, "extremum type disagrees with edge position");
  }
  for (std::size_t j = 0; j + 1 < report.edges.size(); j += 2)
    report.intervals.push_back({report.edges[j + 1].e_star, report.edges[j].e_star});
  std::reverse(report.intervals.begin(), report.intervals.end());

  // Hard edges: confirm the geometric side by probing the density.
  for (auto& e : report.edges) {
    if (e.soft) continue;
    const double h = 1e-6 * std::max(1.0, report.diameter());
    const double left = density_f0(pop, -h, {.cross_check = false});
    const double right = density_f0(pop, h, {.cross_check = false});
    const EdgeSide probe = left > right ? EdgeSide::Right : EdgeSide::Left;
    if (probe != e.side) fail(ErrorKind::BracketFailure, "hard edge side probe disagrees with ordering");
  }
  return report;
}

enum class EdgeSelector { Rightmost, Leftmost, MClosestToZeroNegative };

inline EdgeInfo edge_for_m_sign(const SupportReport& report, EdgeSelector want) {
  if (report.edges.empty()) fail(ErrorKind::NoSuchEdge, "support report has no edges");
  switch (want) {
    case EdgeSelector::Rightmost: return report.edges.front();
    case EdgeSelector::Leftmost: return report.edges.back();
    case EdgeSelector::MClosestToZeroNegative: {
      const EdgeInfo* best = nullptr;
      for (const auto& e : report.edges) {
        if (!e.soft || !(e.m_star < 0.0)) continue;
        if (best == nullptr || e.m_star > best->m_star) best = &e;
      }
      if (best == nullptr) fail(ErrorKind::NoSuchEdge, "no edge with negative m-value");
      return *best;
    }
  }
  fail(ErrorKind::NoSuchEdge, "unknown selector");
}

/// tau-regularity: |m*| < 1/tau, gamma < 1/tau, |m* + 1/t| > tau for t != 0.
inline bool check_regularity(const PopulationSpec& pop, const EdgeInfo& edge, double tau) {
  if (!edge.soft || !edge.gamma) return false;
  if (!(std::abs(edge.m_star) < 1.0 / tau)) return false;
  if (!(*edge.gamma < 1.0 / tau)) return false;
  for (const auto& e : pop.entries())
    if (e.t != 0.0 && !(std::abs(edge.m_star + 1.0 / e.t) > tau)) return false;
  return true;
}

/// Sufficient condition for regularity of the rightmost edge: the largest
/// diagonal value is at least c and has multiplicity at least c M.
inline bool balanced_sufficiency(const PopulationSpec& pop, double c) {
  if (!(c > 0.0)) fail(ErrorKind::DomainError, "c must be positive");
  const auto& top = pop.entries().back();
  const bool holds = top.t >= c && static_cast<double>(top.mult) >= c * static_cast<double>(pop.total_mult());
  if (holds) {
    const auto report = find_edges(pop);
    const auto& right = report.edges.front();
    if (!(right.regularity_margin > 0.0) || !check_regularity(pop, right, 0.5 * right.regularity_margin))
      fail(ErrorKind::IrregularEdge, "balanced population with an irregular rightmost edge");
  }
  return holds;
}

}  // namespace mpedge
