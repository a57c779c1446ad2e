#pragma once

#include <cmath>
#include <complex>
#include <cstdint>

#include "mpedge/population.hpp"

namespace fixtures {

inline mpedge::PopulationSpec identity(std::int64_t m, std::int64_t n) {
  return mpedge::PopulationSpec({{1.0, m}}, n);
}

inline mpedge::PopulationSpec fig1() { return mpedge::PopulationSpec({{-2.0, 350}, {0.5, 300}, {6.0, 50}}, 500); }

inline mpedge::PopulationSpec fig2() { return mpedge::PopulationSpec({{-1.0, 400}, {4.0, 100}}, 500); }

// Closed forms for T = Id: the two critical points of z0 and their images.
struct IdentityEdge {
  double m;
  double e;
  double gamma;
};

inline IdentityEdge identity_edge(double m_dim, double n_dim, int sign) {
  const double sn = std::sqrt(n_dim);
  const double sm = std::sqrt(m_dim);
  const double m = -sn / (sn + sign * sm);
  const double r = m_dim / n_dim;
  const double e = (1.0 + sign * std::sqrt(r)) * (1.0 + sign * std::sqrt(r));
  const double curv = -2.0 / (m * m * m) + 2.0 * r / ((1.0 + m) * (1.0 + m) * (1.0 + m));
  return {m, e, std::sqrt(2.0 / std::abs(curv))};
}

// Stieltjes transform of the white Wishart law: root of
// z m^2 + (z - M/N + 1) m + 1 = 0 in the upper half plane.
inline std::complex<double> identity_m0(double m_dim, double n_dim, std::complex<double> z) {
  const double r = m_dim / n_dim;
  const std::complex<double> b = z - r + 1.0;
  const std::complex<double> disc = std::sqrt(b * b - 4.0 * z);
  const std::complex<double> r1 = (-b + disc) / (2.0 * z);
  const std::complex<double> r2 = (-b - disc) / (2.0 * z);
  return r1.imag() > 0.0 ? r1 : r2;
}

// Marcenko-Pastur density for T = Id.
inline double identity_density(double m_dim, double n_dim, double x) {
  const double r = m_dim / n_dim;
  const double lo = (1.0 - std::sqrt(r)) * (1.0 - std::sqrt(r));
  const double hi = (1.0 + std::sqrt(r)) * (1.0 + std::sqrt(r));
  if (x <= lo || x >= hi) return 0.0;
  return std::sqrt((hi - x) * (x - lo)) / (2.0 * M_PI * x);
}

}  // namespace fixtures
