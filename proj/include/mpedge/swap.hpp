#pragma once

// Deterministic skeleton of the Lindeberg interpolation from T to a
// two-valued population, tracking one regular right edge at unit scale.

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mpedge/detail/roots.hpp"
#include "mpedge/edges.hpp"
#include "mpedge/error.hpp"
#include "mpedge/population.hpp"

namespace mpedge {

enum class SwapPhase { Reflect, RaiseToMax, SeedFraction, ZeroAbove, ZeroBelow, Done };

constexpr const char* to_string(SwapPhase p) {
  switch (p) {
    case SwapPhase::Reflect: return "reflect";
    case SwapPhase::RaiseToMax: return "raise_to_max";
    case SwapPhase::SeedFraction: return "seed_fraction";
    case SwapPhase::ZeroAbove: return "zero_above";
    case SwapPhase::ZeroBelow: return "zero_below";
    case SwapPhase::Done: return "done";
  }
  return "unknown";
}

inline SwapPhase parse_swap_phase(const std::string& s) {
  for (auto p : {SwapPhase::Reflect, SwapPhase::RaiseToMax, SwapPhase::SeedFraction, SwapPhase::ZeroAbove,
                 SwapPhase::ZeroBelow, SwapPhase::Done})
    if (s == to_string(p)) return p;
  fail(ErrorKind::InvalidInput, "unknown swap phase '" + s + "'");
}

/// One element T^{(l)} of the sequence. `diag` keeps the per-entry order so
/// consecutive states can be compared entry by entry.
struct SwapState {
  std::vector<double> diag;
  std::int64_t n_dim = 0;
  EdgeInfo edge;
  std::size_t step = 0;
  std::optional<std::size_t> swapped_index;
  /// Value written into swapped_index before the rescale.
  double new_t = 0.0;
  /// Factor c of the rescale T -> c T applied after the swap.
  double scale_factor = 1.0;
  /// Scale of the edge after the swap and before the rescale.
  double gamma_before_rescale = 1.0;
  /// Phase of the swap that produced this state; the initial state carries
  /// the first phase of its branch and the last state carries Done.
  SwapPhase phase = SwapPhase::Done;

  PopulationSpec population() const {
    return PopulationSpec::from_diagonal(diag, n_dim, PopulationBounds{0.0, 1e300, 1e300});
  }
};

struct SwapDiagnostics {
  std::vector<double> s_alpha, s_check_alpha;
  std::vector<double> P_alpha, Q_alpha, R_alpha;
  double A4 = 0.0;
  double l1_t_diff = 0.0;
  double m_diff = 0.0;
  double E_diff = 0.0;
  double gamma_diff = 0.0;
  double sum_rule_1_residual = 0.0;
  double sum_rule_2_residual = 0.0;
  double edge_identity_residual = 0.0;
};

struct SwapOptions {
  double c0 = 0.05;
  double phi = 10.0;
  /// Regularity floor tau' every tracked edge must keep.
  double tau_prime = 0.01;
};

namespace detail {

/// k-th derivative (k = 0..2) of z0 for an explicit diagonal.
inline double z0_diag(std::span<const double> diag, double n_dim, double m, int order) {
  double sum = 0.0;
  for (double t : diag) {
    if (t == 0.0) continue;
    const double u = t / (1.0 + t * m);
    sum += order == 0 ? u : order == 1 ? u * u : u * u * u;
  }
  switch (order) {
    case 0: return -1.0 / m + sum / n_dim;
    case 1: return 1.0 / (m * m) - sum / n_dim;
    default: return -2.0 / (m * m * m) + 2.0 * sum / n_dim;
  }
}

/// Sum of |terms| of z0' at m, the rounding scale of that evaluation.
inline double z0_diag_scale(std::span<const double> diag, double n_dim, double m) {
  double sum = 0.0;
  for (double t : diag) {
    if (t == 0.0) continue;
    const double u = t / (1.0 + t * m);
    sum += u * u;
  }
  return 1.0 / (m * m) + sum / n_dim;
}

inline double regularity_margin_diag(std::span<const double> diag, double m, double gamma) {
  double margin = std::min(1.0 / std::abs(m), 1.0 / gamma);
  for (double t : diag)
    if (t != 0.0) margin = std::min(margin, std::abs(m + 1.0 / t));
  return margin;
}

inline EdgeInfo edge_at(std::span<const double> diag, double n_dim, double m) {
  EdgeInfo e;
  e.m_star = m;
  e.q_star = 1.0 / m;
  e.e_star = z0_diag(diag, n_dim, m, 0);
  e.curvature = z0_diag(diag, n_dim, m, 2);
  if (std::abs(e.curvature) >= kDegenerateCurvature) e.gamma = std::sqrt(2.0 / std::abs(e.curvature));
  e.side = e.curvature > 0.0 ? EdgeSide::Right : EdgeSide::Left;
  e.extremum_side = e.side;
  e.soft = true;
  e.regularity_margin = e.gamma ? regularity_margin_diag(diag, m, *e.gamma) : 0.0;
  return e;
}

/// Nearest pole of z0 (including 0) strictly beyond m in direction dir.
inline double nearest_pole(std::span<const double> diag, double m, double dir) {
  double best = dir > 0 ? std::numeric_limits<double>::infinity() : -std::numeric_limits<double>::infinity();
  auto consider = [&](double p) {
    if (dir > 0 ? (p > m && p < best) : (p < m && p > best)) best = p;
  };
  consider(0.0);
  for (double t : diag)
    if (t != 0.0) consider(-1.0 / t);
  return best;
}

/// Local minimum of z0 for `after` next to m_before, located per the sign
/// rule sign(m - m') = sign(z0'(m)) within 4 phi / N.
inline double track_minimum(std::span<const double> before, std::span<const double> after, double n_dim,
                            double m_before, double phi) {
  const double d1 = z0_diag(after, n_dim, m_before, 1);
  if (std::abs(d1) <= 64.0 * std::numeric_limits<double>::epsilon() * z0_diag_scale(after, n_dim, m_before))
    return m_before;
  const double dir = d1 < 0.0 ? 1.0 : -1.0;
  const double width = 4.0 * phi / n_dim;
  const double pole = dir > 0 ? std::min(nearest_pole(before, m_before, dir), nearest_pole(after, m_before, dir))
                              : std::max(nearest_pole(before, m_before, dir), nearest_pole(after, m_before, dir));
  double end = m_before + dir * width;
  bool pole_in_bracket = false;
  if ((end - pole) * dir >= 0.0) {
    end = m_before + 0.999 * (pole - m_before);
    pole_in_bracket = true;
  }
  auto f = [&](double m) { return z0_diag(after, n_dim, m, 1); };
  auto df = [&](double m) { return z0_diag(after, n_dim, m, 2); };
  // First sign change on a uniform scan of the bracket.
  constexpr int kScan = 32;
  double prev = m_before;
  for (int k = 1; k <= kScan; ++k) {
    const double x = m_before + (end - m_before) * k / kScan;
    if ((f(x) > 0.0) != (d1 > 0.0)) {
      const double root = bracketed_newton(f, df, prev, x, 1e-15, 1e-300);
      if (!(df(root) > 0.0)) fail(ErrorKind::SwapRejected, "tracked critical point is not a minimum");
      return root;
    }
    prev = x;
  }
  fail(ErrorKind::SwapRejected, std::string("no minimum within the tracking bracket") +
                                    (pole_in_bracket ? " (a pole intervenes)" : ""));
}

}  // namespace detail

/// T -> gamma^{2/3} T, which sends gamma to 1; m scales by gamma^{-2/3}.
inline std::pair<PopulationSpec, EdgeInfo> rescale_unit_gamma(const PopulationSpec& pop, const EdgeInfo& edge) {
  if (!edge.soft || !edge.gamma || !(*edge.gamma > 0.0)) fail(ErrorKind::IrregularEdge, "edge has no scale");
  const double c = std::pow(*edge.gamma, 2.0 / 3.0);
  const PopulationSpec scaled = pop.scaled(c);
  const std::vector<double> diag = scaled.diagonal();
  const double m_guess = edge.m_star / c;
  auto f = [&](double m) { return detail::z0_diag(diag, scaled.n(), m, 1); };
  auto df = [&](double m) { return detail::z0_diag(diag, scaled.n(), m, 2); };
  double m = m_guess;
  for (int it = 0; it < 3; ++it) {
    const double step = f(m) / df(m);
    if (!std::isfinite(step) || std::abs(step) > 1e-6 * std::max(1.0, std::abs(m))) break;
    m -= step;
  }
  EdgeInfo out = detail::edge_at(diag, scaled.n(), m);
  out.side = edge.side;
  out.extremum_side = edge.extremum_side;
  return {scaled, out};
}

/// Edge of the population after writing new_t into entry `index` of the
/// diagonal (in PopulationSpec::diagonal order).
inline EdgeInfo track_edge_after_swap(std::span<const double> diag, std::int64_t n_dim, const EdgeInfo& edge,
                                      std::size_t index, double new_t, double phi = 10.0, double tau = 0.01) {
  if (index >= diag.size()) fail(ErrorKind::InvalidInput, "swap index out of range");
  if (!edge.soft) fail(ErrorKind::IrregularEdge, "cannot track a hard edge");
  if (!std::isfinite(new_t) || std::abs(new_t) > PopulationBounds{}.max_abs_t)
    fail(ErrorKind::SwapRejected, "new value out of range");
  if (new_t != 0.0 && !(std::abs(edge.m_star + 1.0 / new_t) > tau))
    fail(ErrorKind::SwapRejected, "new pole within tau of the edge");
  std::vector<double> after(diag.begin(), diag.end());
  after[index] = new_t;
  const double m = detail::track_minimum(diag, after, static_cast<double>(n_dim), edge.m_star, phi);
  EdgeInfo out = detail::edge_at(after, static_cast<double>(n_dim), m);
  return out;
}

inline EdgeInfo track_edge_after_swap(const PopulationSpec& pop, const EdgeInfo& edge, std::size_t index,
                                      double new_t, double phi = 10.0, double tau = 0.01) {
  const auto diag = pop.diagonal();
  return track_edge_after_swap(diag, pop.n_dim(), edge, index, new_t, phi, tau);
}

namespace detail {

class SequenceBuilder {
 public:
  SequenceBuilder(std::vector<double> diag, std::int64_t n_dim, double m, const SwapOptions& opts)
      : opts_(opts), n_dim_(n_dim) {
    SwapState s0;
    s0.diag = std::move(diag);
    s0.n_dim = n_dim;
    s0.edge = edge_at(s0.diag, static_cast<double>(n_dim), m);
    check(s0);
    states_.push_back(std::move(s0));
  }

  const SwapState& current() const { return states_.back(); }

  void swap(std::size_t index, double new_t, SwapPhase phase) {
    const SwapState& cur = states_.back();
    const double n = static_cast<double>(n_dim_);
    std::vector<double> after = cur.diag;
    after[index] = new_t;
    const EdgeInfo raw = track_edge_after_swap(cur.diag, n_dim_, cur.edge, index, new_t, opts_.phi, opts_.tau_prime);
    if (!raw.gamma) fail(ErrorKind::RegularityLost, "tracked edge degenerated at step " + std::to_string(cur.step + 1));
    const double c = std::pow(*raw.gamma, 2.0 / 3.0);
    for (double& t : after) t *= c;
    // Polish the critical point at the new scale.
    double m = raw.m_star / c;
    const double step = z0_diag(after, n, m, 1) / z0_diag(after, n, m, 2);
    if (std::isfinite(step) && std::abs(step) < 1e-8 * std::max(1.0, std::abs(m))) m -= step;
    SwapState next;
    next.diag = std::move(after);
    next.n_dim = n_dim_;
    next.edge = edge_at(next.diag, n, m);
    next.step = cur.step + 1;
    next.swapped_index = index;
    next.new_t = new_t;
    next.scale_factor = c;
    next.gamma_before_rescale = *raw.gamma;
    next.phase = phase;
    check(next);
    states_.push_back(std::move(next));
  }

  std::vector<SwapState> finish() {
    if (states_.size() > 1) states_.back().phase = SwapPhase::Done;
    if (states_.size() - 1 > 2 * states_.front().diag.size())
      fail(ErrorKind::SwapRejected, "sequence longer than 2M");
    return std::move(states_);
  }

  std::vector<SwapState>& states() { return states_; }

 private:
  void check(const SwapState& s) const {
    if (!(s.edge.curvature > 0.0)) fail(ErrorKind::RegularityLost, "tracked edge is not a right edge at step " + std::to_string(s.step));
    if (!(s.edge.regularity_margin >= opts_.tau_prime))
      fail(ErrorKind::RegularityLost, "margin " + std::to_string(s.edge.regularity_margin) + " below tau' at step " +
                                          std::to_string(s.step));
  }

  SwapOptions opts_;
  std::int64_t n_dim_;
  std::vector<SwapState> states_;
};

inline std::vector<SwapState> build_negative_branch(std::vector<double> diag, std::int64_t n_dim, double m,
                                                    const SwapOptions& opts) {
  SequenceBuilder b(std::move(diag), n_dim, m, opts);
  b.states().front().phase = SwapPhase::Reflect;
  // Reflect every pole to the right of m* about m*.
  const std::size_t count = b.current().diag.size();
  for (std::size_t a = 0; a < count; ++a) {
    const double t = b.current().diag[a];
    const double ms = b.current().edge.m_star;
    if (t == 0.0 || !(-1.0 / t > ms)) continue;
    b.swap(a, -1.0 / (2.0 * ms + 1.0 / t), SwapPhase::Reflect);
  }
  // Raise every positive entry below the maximum to the maximum.
  for (std::size_t a = 0; a < count; ++a) {
    const auto& d = b.current().diag;
    const double tmax = *std::max_element(d.begin(), d.end());
    if (d[a] > 0.0 && d[a] < tmax) b.swap(a, tmax, SwapPhase::RaiseToMax);
  }
  return b.finish();
}

inline std::vector<SwapState> build_positive_branch(std::vector<double> diag, std::int64_t n_dim, double m,
                                                    const SwapOptions& opts, double c0) {
  // t < 0 with pole -1/t in (0, m*) closest to m*.
  std::optional<double> target;
  for (double t : diag) {
    if (t >= 0.0) continue;
    const double pole = -1.0 / t;
    if (pole > 0.0 && pole < m && (!target || pole > -1.0 / *target)) target = t;
  }
  if (!target) fail(ErrorKind::SwapRejected, "no negative entry with a pole in (0, m*)");
  const std::size_t count = diag.size();
  std::vector<std::size_t> position;  // entries equal to the target value, by index
  SequenceBuilder b(std::move(diag), n_dim, m, opts);
  b.states().front().phase = SwapPhase::SeedFraction;
  const double t0 = *target;
  auto is_target = [&](std::size_t a) {
    // Rescaling multiplies every entry by the same factor, so the target
    // entries keep a common value: compare against a reference entry.
    return !position.empty() && b.current().diag[a] == b.current().diag[position.front()];
  };
  for (std::size_t a = 0; a < count; ++a)
    if (b.current().diag[a] == t0) position.push_back(a);
  auto target_value = [&] { return b.current().diag[position.front()]; };

  // Seed floor(c0 M) entries at t, taking the largest entries first.
  const auto seeds = static_cast<std::size_t>(std::floor(c0 * static_cast<double>(count)));
  std::vector<std::size_t> order(count);
  for (std::size_t a = 0; a < count; ++a) order[a] = a;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return b.current().diag[x] > b.current().diag[y]; });
  std::size_t seeded = 0;
  for (std::size_t a : order) {
    if (seeded == seeds) break;
    if (is_target(a)) continue;
    b.swap(a, target_value(), SwapPhase::SeedFraction);
    position.push_back(a);
    ++seeded;
  }
  for (std::size_t a = 0; a < count; ++a) {
    const double v = b.current().diag[a];
    if (v != 0.0 && !is_target(a) && v > target_value()) b.swap(a, 0.0, SwapPhase::ZeroAbove);
  }
  for (std::size_t a = 0; a < count; ++a) {
    const double v = b.current().diag[a];
    if (v != 0.0 && !is_target(a) && v < target_value()) b.swap(a, 0.0, SwapPhase::ZeroBelow);
  }
  return b.finish();
}

}  // namespace detail

/// Interpolating sequence for a regular right edge. The population is first
/// rescaled to gamma = 1; the m* < 0 branch reflects and raises, the m* > 0
/// branch seeds a fraction c0 at the pole-adjacent negative value and zeroes
/// the rest. RegularityLost in the second branch halves c0 down to 1/M.
inline std::vector<SwapState> build_swap_sequence(const PopulationSpec& pop, const EdgeInfo& edge,
                                                  const SwapOptions& opts = {}) {
  if (!edge.soft || !edge.gamma) fail(ErrorKind::IrregularEdge, "edge is hard or degenerate");
  if (edge.side != EdgeSide::Right) fail(ErrorKind::IrregularEdge, "reflect the population for a left edge");
  const auto [scaled, unit] = rescale_unit_gamma(pop, edge);
  if (!(unit.regularity_margin >= opts.tau_prime)) fail(ErrorKind::IrregularEdge, "edge margin below tau'");
  std::vector<double> diag = scaled.diagonal();
  if (unit.m_star < 0.0) return detail::build_negative_branch(std::move(diag), scaled.n_dim(), unit.m_star, opts);
  const double floor_c0 = 1.0 / static_cast<double>(diag.size());
  for (double c0 = opts.c0;; c0 *= 0.5) {
    try {
      return detail::build_positive_branch(diag, scaled.n_dim(), unit.m_star, opts, std::max(c0, floor_c0));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::RegularityLost || c0 <= floor_c0) throw;
    }
  }
}

/// Per-entry sum-rule quantities and the swappability bounds for a
/// consecutive pair; throws NotSwappable naming the violated bound.
inline SwapDiagnostics swap_diagnostics(const SwapState& a, const SwapState& b) {
  if (a.diag.size() != b.diag.size() || a.n_dim != b.n_dim) fail(ErrorKind::InvalidInput, "states differ in shape");
  const double n = static_cast<double>(a.n_dim);
  const double m = a.edge.m_star;
  const double mc = b.edge.m_star;
  SwapDiagnostics d;
  const std::size_t count = a.diag.size();
  d.s_alpha.resize(count);
  d.s_check_alpha.resize(count);
  d.P_alpha.resize(count);
  d.Q_alpha.resize(count);
  d.R_alpha.resize(count);
  double sum_p = 0.0, sum_q = 0.0, sum_e = 0.0, a4 = 0.0;
  for (std::size_t i = 0; i < count; ++i) {
    const double t = a.diag[i];
    const double tc = b.diag[i];
    const double s = 1.0 / (1.0 + t * m);
    const double sc = 1.0 / (1.0 + tc * mc);
    const double u = t * s;
    const double uc = tc * sc;
    const double ss = s * sc;
    d.s_alpha[i] = s;
    d.s_check_alpha[i] = sc;
    d.P_alpha[i] = ss * (u + uc);
    d.Q_alpha[i] = ss * (u * u + u * uc + uc * uc);
    d.R_alpha[i] = u * uc * (mc - m) * (u + uc);
    const double dt = t - tc;
    d.l1_t_diff += std::abs(dt);
    sum_p += dt * d.P_alpha[i];
    sum_q += dt * d.Q_alpha[i];
    sum_e += dt * ss;
    a4 += u * u * u * u;
  }
  d.A4 = a4 / n;
  const double dm = m - mc;
  d.m_diff = std::abs(dm);
  d.E_diff = std::abs(a.edge.e_star - b.edge.e_star);
  const double gamma_a = a.edge.gamma.value_or(0.0);
  d.gamma_diff = b.swapped_index ? std::abs(gamma_a - b.gamma_before_rescale) : std::abs(gamma_a - b.edge.gamma.value_or(0.0));
  d.sum_rule_1_residual = std::abs(2.0 * n * dm - sum_p);
  d.sum_rule_2_residual = std::abs(3.0 * n * dm * (d.A4 - 1.0 / (m * m * m * m)) - sum_q);
  d.edge_identity_residual = std::abs((a.edge.e_star - b.edge.e_star) - sum_e / n);
  return d;
}

inline SwapDiagnostics verify_swappable(const SwapState& a, const SwapState& b, double phi = 10.0) {
  SwapDiagnostics d = swap_diagnostics(a, b);
  const double n = static_cast<double>(a.n_dim);
  if (!(d.l1_t_diff < phi))
    fail(ErrorKind::NotSwappable, "sum |t - t'| = " + std::to_string(d.l1_t_diff) + " >= phi = " + std::to_string(phi));
  if (!(d.m_diff < phi / n))
    fail(ErrorKind::NotSwappable, "|m - m'| = " + std::to_string(d.m_diff) + " >= phi/N = " + std::to_string(phi / n));
  return d;
}

/// 64-bit FNV-1a over the bytes of the diagonal.
inline std::uint64_t diagonal_digest(std::span<const double> diag) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (double t : diag) {
    const auto bits = std::bit_cast<std::uint64_t>(t);
    for (int k = 0; k < 8; ++k) {
      h ^= (bits >> (8 * k)) & 0xffU;
      h *= 0x100000001b3ULL;
    }
  }
  return h;
}

/// Rebuilds the states of a sequence from its initial diagonal and the
/// recorded (index, new value) of every swap.
inline std::vector<SwapState> replay_swap_sequence(std::vector<double> diag, std::int64_t n_dim, double m_star,
                                                   std::span<const std::pair<std::size_t, double>> swaps,
                                                   std::span<const SwapPhase> phases, const SwapOptions& opts = {}) {
  if (phases.size() != swaps.size()) fail(ErrorKind::InvalidInput, "one phase per swap expected");
  for (const auto& [index, t] : swaps)
    if (index >= diag.size()) fail(ErrorKind::InvalidInput, "recorded swap index out of range");
  detail::SequenceBuilder b(std::move(diag), n_dim, m_star, opts);
  for (std::size_t k = 0; k < swaps.size(); ++k) b.swap(swaps[k].first, swaps[k].second, phases[k]);
  return b.finish();
}

struct SumRuleResiduals {
  double r1 = 0.0;
  double r2 = 0.0;
  double r_edge = 0.0;
  double r_gamma = 0.0;
};

inline SumRuleResiduals sum_rule_residuals(const SwapState& a, const SwapState& b) {
  const auto d = swap_diagnostics(a, b);
  return {d.sum_rule_1_residual, d.sum_rule_2_residual, d.edge_identity_residual, d.gamma_diff};
}

}  // namespace mpedge
