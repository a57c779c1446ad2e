#pragma once

// Density f0 of mu0 from boundary values of m0 on the real axis.

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "mpedge/detail/qform.hpp"
#include "mpedge/detail/roots.hpp"
#include "mpedge/error.hpp"
#include "mpedge/population.hpp"
#include "mpedge/spectral.hpp"

namespace mpedge {

/// Boundary value of m0 at a real point together with how it was selected.
struct BoundaryValue {
  cplx m;                 ///< m0(x); real outside the support
  bool in_support = false;
};

namespace detail {

/// Newton polish of a root of g(q) = x in the complex plane.
inline cplx polish_q_root(const QForm& qf, double x, cplx q) {
  for (int it = 0; it < 60; ++it) {
    const cplx f = qf.g(q) - x;
    const cplx df = qf.g1(q);
    if (df == 0.0) break;
    const cplx step = f / df;
    const cplx next = q - step;
    if (!std::isfinite(next.real()) || !std::isfinite(next.imag())) break;
    q = next;
    if (std::abs(step) <= 1e-16 * std::abs(q)) break;
  }
  return q;
}

}  // namespace detail

/// Boundary value of m0 at x != 0 (or x = 0 when rank(T) > N) by clearing
/// denominators in g(q) = z0(1/q) = x and taking all polynomial roots.
///
/// Inside the support exactly one conjugate pair of roots is non-real and the
/// root with Im q < 0 gives m0 = 1/q in C+. Outside the support every root is
/// real and m0(x) is the unique real root with z0'(m) > 0.
inline BoundaryValue boundary_m0(const PopulationSpec& pop, double x) {
  if (x == 0.0 && pop.rank() <= pop.n_dim())
    fail(ErrorKind::UndefinedAtZero, "f0 is undefined at 0 when rank(T) <= N");
  if (pop.all_zero()) fail(ErrorKind::DegeneratePopulation, "all diagonal values are zero");
  const detail::QForm qf(pop);
  auto roots = detail::polynomial_roots(qf.cleared_polynomial(x));
  for (auto& r : roots) r = detail::polish_q_root(qf, x, r);

  const cplx* lowest = nullptr;
  for (const auto& r : roots)
    if (lowest == nullptr || r.imag() < lowest->imag()) lowest = &r;
  if (lowest != nullptr && lowest->imag() < -1e-13 * (1.0 + std::abs(*lowest))) {
    return {1.0 / *lowest, true};
  }
  // Outside the support: pick the real root with g'(q) < 0 (z0'(m) > 0).
  std::optional<double> best;
  double best_slope = 0.0;
  for (const auto& r : roots) {
    const double q = r.real();
    if (q == 0.0) continue;
    const double slope = qf.g1(q);
    if (slope < best_slope) {
      best_slope = slope;
      best = q;
    }
  }
  if (!best) return {cplx(std::numeric_limits<double>::quiet_NaN(), 0.0), false};
  return {cplx(1.0 / *best, 0.0), false};
}

/// f0 by the eta-ladder: Im m0(x + i eta) / pi at eta = 1e-9 and 1e-10,
/// combined by one Richardson step. Independent of the polynomial route.
inline double density_f0_ladder(const PopulationSpec& pop, double x) {
  if (x == 0.0 && pop.rank() <= pop.n_dim())
    fail(ErrorKind::UndefinedAtZero, "f0 is undefined at 0 when rank(T) <= N");
  const double coarse = solve_m0(pop, cplx(x, 1e-9)).imag();
  const double fine = solve_m0(pop, cplx(x, 1e-10)).imag();
  const double extrapolated = (10.0 * fine - coarse) / 9.0;
  return std::max(0.0, extrapolated) / std::numbers::pi;
}

struct DensityOptions {
  /// Re-derive the value by the eta-ladder and throw SolverDisagreement if
  /// the two routes differ by more than cross_check_tol.
  bool cross_check = true;
  double cross_check_tol = 1e-6;
};

/// f0(x) = (1/pi) Im m0(x); zero outside the support.
inline double density_f0(const PopulationSpec& pop, double x, const DensityOptions& opts = {}) {
  const BoundaryValue bv = boundary_m0(pop, x);
  const double f0 = bv.in_support ? std::max(0.0, bv.m.imag()) / std::numbers::pi : 0.0;
  if (opts.cross_check) {
    const double other = density_f0_ladder(pop, x);
    if (std::abs(other - f0) > opts.cross_check_tol) {
      fail(ErrorKind::SolverDisagreement,
           "polynomial route f0 = " + std::to_string(f0) + " but eta-ladder gives " +
               std::to_string(other) + " at x = " + std::to_string(x));
    }
  }
  return f0;
}

}  // namespace mpedge
