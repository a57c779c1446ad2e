#pragma once

#include <cmath>
#include <complex>
#include <limits>
#include <vector>

#include <Eigen/Dense>

#include "mpedge/error.hpp"

namespace mpedge::detail {

/// Newton iteration safeguarded by bisection on a sign-changing bracket.
/// f(lo) and f(hi) must have opposite signs (or one of them vanish).
template <class F, class DF>
double bracketed_newton(F&& f, DF&& df, double lo, double hi, double rel_tol = 1e-15,
                        double abs_tol = 0.0, int max_iter = 500) {
  const double flo = f(lo);
  const double fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo > 0.0) == (fhi > 0.0) || std::isnan(flo) || std::isnan(fhi))
    fail(ErrorKind::BracketFailure, "root bracket does not change sign");
  // xl carries f < 0, xh carries f > 0; they need not be ordered.
  double xl = flo < 0.0 ? lo : hi;
  double xh = flo < 0.0 ? hi : lo;
  double x = 0.5 * (xl + xh);
  double dx_old = std::abs(xh - xl);
  double dx = dx_old;
  double fx = f(x);
  double dfx = df(x);
  for (int it = 0; it < max_iter; ++it) {
    if (fx == 0.0) return x;
    const bool newton_leaves = ((x - xh) * dfx - fx) * ((x - xl) * dfx - fx) > 0.0;
    if (newton_leaves || !std::isfinite(dfx) || std::abs(2.0 * fx) > std::abs(dx_old * dfx)) {
      dx_old = dx;
      dx = 0.5 * (xh - xl);
      x = xl + dx;
    } else {
      dx_old = dx;
      dx = fx / dfx;
      x -= dx;
    }
    const double tol = rel_tol * std::abs(x) + abs_tol;
    if (std::abs(dx) <= tol || std::abs(xh - xl) <= tol) return x;
    fx = f(x);
    dfx = df(x);
    if (fx < 0.0) xl = x; else xh = x;
  }
  return x;
}

/// All complex roots of a monic polynomial (ascending coefficients) from the
/// eigenvalues of its companion matrix.
inline std::vector<std::complex<double>> polynomial_roots(const std::vector<double>& monic) {
  const int deg = static_cast<int>(monic.size()) - 1;
  std::vector<std::complex<double>> roots;
  if (deg < 1) return roots;
  Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(deg, deg);
  for (int i = 1; i < deg; ++i) comp(i, i - 1) = 1.0;
  for (int i = 0; i < deg; ++i) comp(i, deg - 1) = -monic[static_cast<std::size_t>(i)];
  Eigen::EigenSolver<Eigen::MatrixXd> es(comp, /*computeEigenvectors=*/false);
  if (es.info() != Eigen::Success) fail(ErrorKind::NonConvergence, "companion eigensolver failed");
  roots.reserve(static_cast<std::size_t>(deg));
  for (int i = 0; i < deg; ++i) roots.push_back(es.eigenvalues()[i]);
  return roots;
}

}  // namespace mpedge::detail
