#pragma once

// Deterministic spectral law of X'TX: the inverse Stieltjes map z0(m), its
// derivatives, and the fixed-point solver for m0(z).

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <string>
#include <vector>

#include "mpedge/error.hpp"
#include "mpedge/population.hpp"

namespace mpedge {

using cplx = std::complex<double>;

/// A point of the open upper half plane.
class ComplexUpper {
 public:
  ComplexUpper(double re, double im) : re_(re), im_(im) {
    if (!(im > 0.0) || !std::isfinite(re) || !std::isfinite(im))
      fail(ErrorKind::DomainError, "spectral parameter must satisfy Im z > 0");
  }
  double re() const { return re_; }
  double im() const { return im_; }
  cplx value() const { return {re_, im_}; }

 private:
  double re_;
  double im_;
};

namespace detail {

/// Poles of z0: {0} and -1/t for every distinct nonzero t, ascending.
inline std::vector<double> z0_poles(const PopulationSpec& pop) {
  std::vector<double> poles{0.0};
  for (const auto& e : pop.entries())
    if (e.t != 0.0) poles.push_back(-1.0 / e.t);
  std::sort(poles.begin(), poles.end());
  return poles;
}

template <class Scalar>
void check_pole_distance(const PopulationSpec& pop, const Scalar& m, double rel_tol) {
  const auto poles = z0_poles(pop);
  std::size_t nearest = 0;
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < poles.size(); ++i) {
    const double d = std::abs(m - poles[i]);
    if (d < best) {
      best = d;
      nearest = i;
    }
  }
  double spacing = std::numeric_limits<double>::infinity();
  if (nearest > 0) spacing = std::min(spacing, poles[nearest] - poles[nearest - 1]);
  if (nearest + 1 < poles.size()) spacing = std::min(spacing, poles[nearest + 1] - poles[nearest]);
  if (!std::isfinite(spacing)) spacing = 1.0;
  if (best <= rel_tol * spacing) {
    fail(ErrorKind::PoleProximity, "m is within " + std::to_string(best) + " of the pole " +
                                       std::to_string(poles[nearest]));
  }
}

/// z0 without pole checks; m must not be a pole.
template <class Scalar>
Scalar z0_raw(const PopulationSpec& pop, const Scalar& m) {
  Scalar sum = 0.0;
  for (const auto& e : pop.entries()) {
    if (e.t == 0.0) continue;
    sum += static_cast<double>(e.mult) * e.t / (1.0 + e.t * m);
  }
  return -1.0 / m + sum / pop.n();
}

/// k-th derivative of z0 (k >= 1) without pole checks.
template <class Scalar>
Scalar z0_derivative_raw(const PopulationSpec& pop, const Scalar& m, int order) {
  double fact = 1.0;
  for (int i = 2; i <= order; ++i) fact *= i;
  const double sign = (order % 2 == 0) ? 1.0 : -1.0;  // (-1)^order
  // d^k/dm^k (-1/m) = -(-1)^k k! / m^{k+1}
  Scalar out = -sign * fact / std::pow(m, order + 1);
  Scalar sum = 0.0;
  for (const auto& e : pop.entries()) {
    if (e.t == 0.0) continue;
    // d^k/dm^k t/(1+tm) = (-1)^k k! t^{k+1} / (1+tm)^{k+1}
    sum += static_cast<double>(e.mult) * std::pow(e.t, order + 1) /
           std::pow(1.0 + e.t * m, order + 1);
  }
  return out + sign * fact * sum / pop.n();
}

/// Magnitude of the summands of z0, used as the rounding-error scale.
inline double z0_scale(const PopulationSpec& pop, cplx m) {
  double s = 1.0 / std::abs(m);
  for (const auto& e : pop.entries()) {
    if (e.t == 0.0) continue;
    s += static_cast<double>(e.mult) * std::abs(e.t / (1.0 + e.t * m)) / pop.n();
  }
  return s;
}

}  // namespace detail

/// Relative pole-proximity tolerance (relative to the local pole spacing).
inline constexpr double kPoleTolerance = 1e-12;

/// z0(m) = -1/m + (1/N) sum_a t_a / (1 + t_a m), with z0(inf) = 0.
inline double z0_eval(const PopulationSpec& pop, double m) {
  if (std::isinf(m)) return 0.0;
  detail::check_pole_distance(pop, m, kPoleTolerance);
  return detail::z0_raw(pop, m);
}

inline cplx z0_eval(const PopulationSpec& pop, cplx m) {
  if (std::isinf(m.real()) || std::isinf(m.imag())) return 0.0;
  detail::check_pole_distance(pop, m, kPoleTolerance);
  return detail::z0_raw(pop, m);
}

/// Exact derivative of z0 of order 1, 2 or 3.
inline double z0_derivative(const PopulationSpec& pop, double m, int order) {
  if (order < 1 || order > 3) fail(ErrorKind::DomainError, "derivative order must be 1, 2 or 3");
  if (std::isinf(m)) return 0.0;
  detail::check_pole_distance(pop, m, kPoleTolerance);
  return detail::z0_derivative_raw(pop, m, order);
}

/// Mass of the atom of mu0 at zero: max(0, 1 - rank(T)/N).
inline double atom_mass_at_zero(const PopulationSpec& pop) {
  return std::max(0.0, 1.0 - static_cast<double>(pop.rank()) / pop.n());
}

struct SolveOptions {
  double tol = 1e-12;
  int max_iterations = 10000;
};

namespace detail {

/// Newton on z0(m) = z from a point of C+, never leaving C+. Returns true on
/// convergence; m and budget are updated in place.
inline bool newton_upper(const PopulationSpec& pop, cplx z, cplx& m, double tol, int& budget) {
  cplx f = z0_raw(pop, m) - z;
  for (; budget > 0; --budget) {
    const double floor = 8.0 * std::numeric_limits<double>::epsilon() * z0_scale(pop, m);
    if (std::abs(f) <= std::max(tol, floor)) return true;
    const cplx df = z0_derivative_raw(pop, m, 1);
    if (df == 0.0) return false;
    cplx step = -f / df;
    bool accepted = false;
    for (int halving = 0; halving < 40; ++halving) {
      const cplx trial = m + step;
      if (trial.imag() > 0.0) {
        const cplx ft = z0_raw(pop, trial) - z;
        if (std::isfinite(ft.real()) && std::isfinite(ft.imag()) && std::abs(ft) < std::abs(f)) {
          m = trial;
          f = ft;
          accepted = true;
          break;
        }
      }
      step *= 0.5;
    }
    if (!accepted) return false;
  }
  return false;
}

}  // namespace detail

/// Solves z0(m) = z for the unique root m0(z) in C+.
///
/// Damped fixed-point iteration m <- 1/(-z + (1/N) sum t/(1+tm)) from m = -1/z,
/// followed by a safeguarded Newton polish. When that stalls, a continuation
/// ladder from Im z = max(1, Im z) down to the target is walked with Newton.
/// Throws ErrorKind::NonConvergence when the iteration budget runs out.
inline cplx solve_m0(const PopulationSpec& pop, const ComplexUpper& zu,
                     const SolveOptions& opts = {}) {
  if (!(opts.tol > 0.0)) fail(ErrorKind::DomainError, "tol must be positive");
  const cplx z = zu.value();
  int budget = opts.max_iterations;

  auto fixed_point = [&](cplx target, cplx m, int iters) {
    for (int k = 0; k < iters && budget > 0; ++k, --budget) {
      cplx s = 0.0;
      for (const auto& e : pop.entries()) {
        if (e.t == 0.0) continue;
        s += static_cast<double>(e.mult) * e.t / (1.0 + e.t * m);
      }
      const cplx phi = 1.0 / (-target + s / pop.n());
      const cplx next = 0.5 * m + 0.5 * phi;
      if (std::abs(next - m) <= 1e-3 * opts.tol * std::abs(m)) return next;
      m = next;
    }
    return m;
  };

  cplx m = fixed_point(z, -1.0 / z, 200);
  if (detail::newton_upper(pop, z, m, opts.tol, budget)) return m;

  // Continuation ladder in the imaginary part.
  double eta = std::max(1.0, 4.0 * zu.im());
  cplx zk{zu.re(), eta};
  m = fixed_point(zk, -1.0 / zk, 2000);
  if (!detail::newton_upper(pop, zk, m, opts.tol, budget))
    fail(ErrorKind::NonConvergence, "m0 solver failed at the top of the continuation ladder");
  while (eta > zu.im()) {
    eta = std::max(zu.im(), eta * 0.25);
    zk = cplx{zu.re(), eta};
    if (!detail::newton_upper(pop, zk, m, opts.tol, budget)) {
      fail(ErrorKind::NonConvergence, "m0 solver stalled at Im z = " + std::to_string(eta));
    }
  }
  return m;
}

inline cplx solve_m0(const PopulationSpec& pop, cplx z, const SolveOptions& opts = {}) {
  return solve_m0(pop, ComplexUpper(z.real(), z.imag()), opts);
}

}  // namespace mpedge
