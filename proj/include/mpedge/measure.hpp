#pragma once

// Integrals and tabulations of mu0 over its computed support.

#include <boost/math/quadrature/tanh_sinh.hpp>
#include <cstddef>
#include <vector>

#include "mpedge/density.hpp"
#include "mpedge/edges.hpp"

namespace mpedge {

struct DensityPoint {
  double x;
  double f0;
};

struct DensityGrid {
  std::vector<DensityPoint> points;
  double atom_at_zero = 0.0;

  double trapezoid_mass() const {
    double s = 0.0;
    for (std::size_t i = 1; i < points.size(); ++i)
      s += 0.5 * (points[i].f0 + points[i - 1].f0) * (points[i].x - points[i - 1].x);
    return s + atom_at_zero;
  }
};

/// Uniform grid of `count` points spanning the support with a 5% margin on
/// each side. A node landing exactly on an undefined 0 is nudged.
inline DensityGrid density_grid(const PopulationSpec& pop, const SupportReport& report, std::size_t count = 2000) {
  if (count < 2) fail(ErrorKind::InvalidInput, "density grid needs at least 2 points");
  const double diam = std::max(report.diameter(), 1e-12);
  const double lo = report.intervals.front().lo - 0.05 * diam;
  const double hi = report.intervals.back().hi + 0.05 * diam;
  const double h = (hi - lo) / static_cast<double>(count - 1);
  DensityGrid grid;
  grid.atom_at_zero = report.atom_at_zero;
  grid.points.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    double x = i + 1 == count ? hi : lo + h * static_cast<double>(i);
    if (x == 0.0 && pop.rank() <= pop.n_dim()) x = 1e-9 * h;
    grid.points.push_back({x, density_f0(pop, x, {.cross_check = false})});
  }
  return grid;
}

/// Integral of f0 over one support interval by tanh-sinh quadrature, which
/// absorbs the square-root (and at a hard edge, inverse square-root)
/// endpoint behaviour.
inline double interval_mass(const PopulationSpec& pop, const SupportInterval& iv, double tol = 1e-12) {
  boost::math::quadrature::tanh_sinh<double> integrator;
  auto f = [&](double x) {
    if (x == 0.0 && pop.rank() <= pop.n_dim()) return 0.0;
    return density_f0(pop, x, {.cross_check = false});
  };
  return integrator.integrate(f, iv.lo, iv.hi, tol);
}

/// Continuous mass plus the atom at zero; equals 1 for a correct support.
inline double total_mass(const PopulationSpec& pop, const SupportReport& report) {
  double s = report.atom_at_zero;
  for (const auto& iv : report.intervals) s += interval_mass(pop, iv);
  return s;
}

}  // namespace mpedge
