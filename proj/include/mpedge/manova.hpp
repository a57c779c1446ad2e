#pragma once

// Variance-component MANOVA: balanced one-way design in closed form, the
// general F construction, and the trace estimator of a variance.

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "mpedge/error.hpp"
#include "mpedge/population.hpp"
#include "mpedge/rng.hpp"

namespace mpedge {

struct OneWayDesign {
  std::int64_t n = 0;
  std::int64_t p = 0;
  std::int64_t I = 0;
  std::int64_t J = 0;
  double sigma1_sq = 0.0;
  double sigma2_sq = 1.0;

  static OneWayDesign balanced(std::int64_t n, std::int64_t p, std::int64_t J, double s1 = 0.0, double s2 = 1.0) {
    if (J <= 0 || n % J != 0) fail(ErrorKind::DesignError, "n must be a multiple of J");
    return {n, p, n / J, J, s1, s2};
  }

  void validate() const {
    if (I < 2) fail(ErrorKind::DesignError, "need I >= 2 groups");
    if (J < 2) fail(ErrorKind::DesignError, "need group size J >= 2");
    if (n != I * J) fail(ErrorKind::DesignError, "n must equal I*J");
    if (p < 1) fail(ErrorKind::DesignError, "need p >= 1");
    if (!(sigma1_sq >= 0.0) || !(sigma2_sq >= 0.0) || !std::isfinite(sigma1_sq) || !std::isfinite(sigma2_sq))
      fail(ErrorKind::DesignError, "variances must be finite and nonnegative");
  }

  double t1() const {
    return static_cast<double>(p) / static_cast<double>(I - 1) * (sigma1_sq + sigma2_sq / static_cast<double>(J));
  }
  double t2() const { return -static_cast<double>(p) * sigma2_sq / static_cast<double>(J * (n - I)); }
};

/// Law of the eigenvalues of Y'B1Y under global sphericity, as X'TX.
inline PopulationSpec oneway_population(const OneWayDesign& d, const PopulationBounds& bounds = {}) {
  d.validate();
  if (d.sigma1_sq == 0.0 && d.sigma2_sq == 0.0) fail(ErrorKind::DesignError, "both variances are zero");
  try {
    return PopulationSpec({{d.t1(), d.I - 1}, {d.t2(), d.n - d.I}, {0.0, d.I + 1}}, d.p, bounds);
  } catch (const Error& e) {
    fail(ErrorKind::DesignError, e.what());
  }
}

/// U = Id_I (x) 1_J.
inline Eigen::MatrixXd oneway_incidence(std::int64_t I, std::int64_t J) {
  Eigen::MatrixXd u = Eigen::MatrixXd::Zero(I * J, I);
  for (std::int64_t g = 0; g < I; ++g) u.block(g * J, g, J, 1).setOnes();
  return u;
}

struct OneWayProjections {
  Eigen::MatrixXd pi1;
  Eigen::MatrixXd pi2;
};

inline OneWayProjections oneway_projections(std::int64_t n, std::int64_t I, std::int64_t J) {
  if (I < 2 || J < 2 || n != I * J) fail(ErrorKind::DesignError, "need n = I*J with I, J >= 2");
  const Eigen::MatrixXd u = oneway_incidence(I, J);
  const Eigen::MatrixXd group = u * u.transpose() / static_cast<double>(J);
  const Eigen::MatrixXd mean = Eigen::MatrixXd::Constant(n, n, 1.0 / static_cast<double>(n));
  return {group - mean, Eigen::MatrixXd::Identity(n, n) - group};
}

/// (B1, B2): unbiased MANOVA weights for the group and error components.
inline std::pair<Eigen::MatrixXd, Eigen::MatrixXd> oneway_B_matrices(std::int64_t n, std::int64_t I, std::int64_t J) {
  const auto pr = oneway_projections(n, I, J);
  const double a = 1.0 / static_cast<double>(I - 1);
  const double b = 1.0 / static_cast<double>(n - I);
  Eigen::MatrixXd b1 = (a * pr.pi1 - b * pr.pi2) / static_cast<double>(J);
  Eigen::MatrixXd b2 = b * pr.pi2;
  return {std::move(b1), std::move(b2)};
}

/// Y'BY, symmetrised.
inline Eigen::MatrixXd manova_estimate(const Eigen::MatrixXd& y, const Eigen::MatrixXd& b) {
  if (b.rows() != b.cols()) fail(ErrorKind::ShapeError, "B must be square");
  if (y.rows() != b.rows())
    fail(ErrorKind::ShapeError, "Y has " + std::to_string(y.rows()) + " rows but B is " + std::to_string(b.rows()) +
                                    "x" + std::to_string(b.cols()));
  Eigen::MatrixXd s = y.transpose() * (b * y);
  return 0.5 * (s + s.transpose());
}

/// p^{-1} tr(Sigma_hat).
inline double estimate_sigma_sq(const Eigen::MatrixXd& sigma_hat, std::int64_t p) {
  if (sigma_hat.rows() != sigma_hat.cols()) fail(ErrorKind::ShapeError, "estimate must be square");
  if (sigma_hat.rows() != p) fail(ErrorKind::ShapeError, "estimate is not p x p");
  return sigma_hat.trace() / static_cast<double>(p);
}

struct GeneralDesign {
  std::vector<Eigen::MatrixXd> U;
  Eigen::MatrixXd B;
  std::vector<double> sigma_sq;
  std::int64_t p = 0;
  std::optional<Eigen::MatrixXd> X_fixed;
  /// Constant in the conditions ||B|| <= C/n and ||U_r|| <= C.
  double norm_bound = 100.0;

  void validate() const {
    if (U.empty()) fail(ErrorKind::DesignError, "need at least one component");
    if (U.size() != sigma_sq.size()) fail(ErrorKind::DesignError, "one variance per component");
    if (p < 1) fail(ErrorKind::DesignError, "need p >= 1");
    const Eigen::Index n = B.rows();
    if (B.cols() != n || n == 0) fail(ErrorKind::DesignError, "B must be square and nonempty");
    const double bnorm = B.cwiseAbs().maxCoeff();
    if ((B - B.transpose()).cwiseAbs().maxCoeff() > 1e-12 * std::max(1.0, bnorm))
      fail(ErrorKind::DesignError, "B is not symmetric");
    const double spec = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(0.5 * (B + B.transpose()), Eigen::EigenvaluesOnly)
                            .eigenvalues()
                            .cwiseAbs()
                            .maxCoeff();
    if (spec > norm_bound / static_cast<double>(n)) fail(ErrorKind::DesignError, "||B|| exceeds C/n");
    for (std::size_t r = 0; r < U.size(); ++r) {
      if (U[r].rows() != n) fail(ErrorKind::DesignError, "U_" + std::to_string(r + 1) + " must have n rows");
      if (!(sigma_sq[r] >= 0.0) || !std::isfinite(sigma_sq[r])) fail(ErrorKind::DesignError, "variances must be >= 0");
      const double unorm = Eigen::JacobiSVD<Eigen::MatrixXd>(U[r]).singularValues()(0);
      if (unorm > norm_bound) fail(ErrorKind::DesignError, "||U_" + std::to_string(r + 1) + "|| exceeds C");
    }
    if (X_fixed) {
      if (X_fixed->rows() != n) fail(ErrorKind::DesignError, "fixed design must have n rows");
      if ((B * *X_fixed).cwiseAbs().maxCoeff() > 1e-10 * std::max(1.0, bnorm * X_fixed->cwiseAbs().maxCoeff()))
        fail(ErrorKind::DesignError, "B X_fixed != 0");
    }
  }
};

namespace detail {

/// Groups nearly-equal eigenvalues into (value, multiplicity). Gaps below
/// rel_tol * scale merge, gaps above 1e3 * rel_tol * scale split, and
/// anything between is ambiguous.
inline std::vector<PopulationEntry> cluster_eigenvalues(std::vector<double> ev, double rel_tol) {
  std::sort(ev.begin(), ev.end());
  double scale = 0.0;
  for (double v : ev) scale = std::max(scale, std::abs(v));
  std::vector<PopulationEntry> out;
  if (ev.empty()) return out;
  if (scale == 0.0) return {{0.0, static_cast<std::int64_t>(ev.size())}};
  const double tol = rel_tol * scale;
  std::vector<std::vector<double>> groups;
  for (double v : ev) {
    if (std::abs(v) <= tol) v = 0.0;
    if (!groups.empty()) {
      const double gap = v - groups.back().back();
      if (gap <= tol) {
        groups.back().push_back(v);
        continue;
      }
      if (gap < 1e3 * tol)
        fail(ErrorKind::ClusterAmbiguity, "eigenvalue gap " + std::to_string(gap) + " is ambiguous at tolerance " +
                                              std::to_string(tol));
    }
    groups.push_back({v});
  }
  for (const auto& g : groups) {
    bool has_zero = std::any_of(g.begin(), g.end(), [](double v) { return v == 0.0; });
    double mean = 0.0;
    for (double v : g) mean += v;
    mean /= static_cast<double>(g.size());
    out.push_back({has_zero ? 0.0 : mean, static_cast<std::int64_t>(g.size())});
  }
  return out;
}

}  // namespace detail

/// Block matrix F_rs = N sigma_r sigma_s U_r' B U_s with N = p.
inline Eigen::MatrixXd general_F_matrix(const GeneralDesign& d) {
  d.validate();
  Eigen::Index m = 0;
  for (const auto& u : d.U) m += u.cols();
  Eigen::MatrixXd f(m, m);
  const double n_dim = static_cast<double>(d.p);
  Eigen::Index ro = 0;
  for (std::size_t r = 0; r < d.U.size(); ++r) {
    const Eigen::MatrixXd bu = d.B * d.U[r];
    Eigen::Index co = 0;
    for (std::size_t s = 0; s < d.U.size(); ++s) {
      const double w = n_dim * std::sqrt(d.sigma_sq[r] * d.sigma_sq[s]);
      f.block(co, ro, d.U[s].cols(), d.U[r].cols()) = w * (d.U[s].transpose() * bu);
      co += d.U[s].cols();
    }
    ro += d.U[r].cols();
  }
  return 0.5 * (f + f.transpose());
}

inline PopulationSpec general_F_population(const GeneralDesign& d, double rel_tol = 1e-9,
                                           const PopulationBounds& bounds = {}) {
  const Eigen::MatrixXd f = general_F_matrix(d);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(f, Eigen::EigenvaluesOnly);
  const Eigen::VectorXd ev = es.eigenvalues();
  auto entries = detail::cluster_eigenvalues(std::vector<double>(ev.data(), ev.data() + ev.size()), rel_tol);
  return PopulationSpec(std::move(entries), d.p, bounds);
}

/// The one-way design in general form for the group component (B = B1).
inline GeneralDesign oneway_general(const OneWayDesign& d) {
  d.validate();
  GeneralDesign g;
  g.U = {oneway_incidence(d.I, d.J), Eigen::MatrixXd::Identity(d.n, d.n)};
  g.B = oneway_B_matrices(d.n, d.I, d.J).first;
  g.sigma_sq = {d.sigma1_sq, d.sigma2_sq};
  g.p = d.p;
  g.X_fixed = Eigen::MatrixXd::Ones(d.n, 1);
  return g;
}

namespace detail {

inline Eigen::MatrixXd psd_sqrt(const Eigen::MatrixXd& s) {
  if (s.rows() != s.cols()) fail(ErrorKind::ShapeError, "covariance must be square");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(0.5 * (s + s.transpose()));
  const Eigen::VectorXd ev = es.eigenvalues();
  if (ev.minCoeff() < -1e-12 * std::max(1.0, ev.cwiseAbs().maxCoeff()))
    fail(ErrorKind::DesignError, "covariance is not positive semidefinite");
  return es.eigenvectors() * ev.cwiseMax(0.0).cwiseSqrt().asDiagonal() * es.eigenvectors().transpose();
}

}  // namespace detail

/// One draw of Y = U alpha + eps with alpha rows ~ (0, Sigma1) and eps rows
/// ~ (0, Sigma2). Entries are standardized draws of `law`.
inline Eigen::MatrixXd simulate_oneway(const OneWayDesign& d, const Eigen::MatrixXd& sigma1,
                                       const Eigen::MatrixXd& sigma2, std::mt19937_64& rng,
                                       EntryLaw law = EntryLaw::Gaussian) {
  d.validate();
  if (sigma1.rows() != d.p || sigma2.rows() != d.p) fail(ErrorKind::ShapeError, "covariances must be p x p");
  const Eigen::MatrixXd a = draw_matrix(rng, d.I, d.p, law, 1.0) * detail::psd_sqrt(sigma1);
  const Eigen::MatrixXd e = draw_matrix(rng, d.n, d.p, law, 1.0) * detail::psd_sqrt(sigma2);
  Eigen::MatrixXd y = e;
  for (std::int64_t g = 0; g < d.I; ++g) y.middleRows(g * d.J, d.J).rowwise() += a.row(g);
  return y;
}

}  // namespace mpedge
