#pragma once

// Monte Carlo harness for X'TX: spectra, Table 1 coverage, rigidity and
// local-law probes. Replicates are independent and aggregated by index, so
// results do not depend on the number of worker threads.

#include <Eigen/Dense>
#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <complex>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

#include "mpedge/edges.hpp"
#include "mpedge/error.hpp"
#include "mpedge/manova.hpp"
#include "mpedge/rng.hpp"
#include "mpedge/spectral.hpp"
#include "mpedge/tw.hpp"
#include "mpedge/tw_test.hpp"

namespace mpedge {

struct SimConfig {
  EntryLaw entry_law = EntryLaw::Gaussian;
  std::int64_t reps = 100;
  std::uint64_t seed = 1;
  int parallel_width = 1;
  /// Largest N accepted by the dense eigensolver path.
  std::int64_t max_dim = 2000;

  void validate() const {
    if (reps < 1) fail(ErrorKind::InvalidInput, "reps must be positive");
    if (parallel_width < 1) fail(ErrorKind::InvalidInput, "parallel_width must be positive");
  }
};

/// Runs fn(i) for i in [0, count) on `width` threads. The first exception
/// thrown by any task is rethrown after all workers stop.
template <class Fn>
void parallel_for(std::size_t count, int width, Fn&& fn) {
  const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(std::max(1, width)), count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::atomic<bool> stop{false};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      while (!stop.load()) {
        const std::size_t i = next.fetch_add(1);
        if (i >= count) return;
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!error) error = std::current_exception();
          stop.store(true);
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

/// Rows of X for the nonzero diagonal values of T; rows that T annihilates
/// do not affect X'TX and are not drawn.
struct PopulationDraw {
  Eigen::MatrixXd x;
  Eigen::VectorXd t;
};

inline PopulationDraw draw_population(const PopulationSpec& pop, const SimConfig& cfg, std::uint64_t rep) {
  if (pop.n_dim() > cfg.max_dim)
    fail(ErrorKind::InvalidInput, "N = " + std::to_string(pop.n_dim()) + " exceeds max_dim " + std::to_string(cfg.max_dim));
  auto rng = replicate_engine(cfg.seed, rep);
  const auto rank = static_cast<Eigen::Index>(pop.rank());
  PopulationDraw d;
  d.t.resize(rank);
  Eigen::Index k = 0;
  for (const auto& e : pop.entries()) {
    if (e.t == 0.0) continue;
    for (std::int64_t j = 0; j < e.mult; ++j) d.t(k++) = e.t;
  }
  d.x = draw_matrix(rng, rank, pop.n_dim(), cfg.entry_law, 1.0 / pop.n());
  return d;
}

inline Eigen::MatrixXd sample_matrix(const PopulationDraw& d) {
  if (d.t.size() == 0) return Eigen::MatrixXd::Zero(d.x.cols(), d.x.cols());
  Eigen::MatrixXd s = d.x.transpose() * (d.t.asDiagonal() * d.x);
  return 0.5 * (s + s.transpose());
}

/// Sorted eigenvalues of X'TX for replicate `rep`.
inline std::vector<double> sample_spectrum(const PopulationSpec& pop, const SimConfig& cfg, std::uint64_t rep) {
  const auto d = draw_population(pop, cfg, rep);
  if (d.t.size() == 0) return std::vector<double>(static_cast<std::size_t>(pop.n_dim()), 0.0);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(sample_matrix(d), Eigen::EigenvaluesOnly);
  const Eigen::VectorXd ev = es.eigenvalues();
  std::vector<double> out(ev.data(), ev.data() + ev.size());
  std::sort(out.begin(), out.end());
  return out;
}

struct CoverageResult {
  std::array<double, 3> levels{0.90, 0.95, 0.99};
  std::array<double, 3> quantiles{};
  std::array<double, 3> values{};
  std::array<double, 3> standard_errors{};
  std::int64_t reps = 0;
  /// Standardized statistics in replicate order.
  std::vector<double> statistics;
};

/// How a replicate of Y'B1Y eigenvalues is generated.
enum class SimRoute {
  /// X'TX with the one-way population (equal in law under sphericity).
  Population,
  /// Simulate Y and form Y'B1Y directly.
  Manova,
};

inline CoverageResult coverage_from_statistics(std::vector<double> stats) {
  CoverageResult out;
  out.reps = static_cast<std::int64_t>(stats.size());
  for (std::size_t k = 0; k < 3; ++k) {
    out.quantiles[k] = f1_quantile(out.levels[k]);
    std::int64_t hits = 0;
    for (double s : stats) hits += s <= out.quantiles[k] ? 1 : 0;
    const double q = static_cast<double>(hits) / static_cast<double>(out.reps);
    out.values[k] = q;
    out.standard_errors[k] = std::sqrt(q * (1.0 - q) / static_cast<double>(out.reps));
  }
  out.statistics = std::move(stats);
  return out;
}

/// Empirical F1-level coverage of (gamma p)^{2/3}(lambda_max - E*) at the
/// edge selected by the test (negative m-value closest to 0).
inline CoverageResult table1_experiment(const OneWayDesign& design, const SimConfig& cfg,
                                        SimRoute route = SimRoute::Population) {
  cfg.validate();
  const auto pop = oneway_population(design);
  const auto report = find_edges(pop);
  const auto edge = edge_for_m_sign(report, EdgeSelector::MClosestToZeroNegative);
  if (!edge.gamma) fail(ErrorKind::IrregularEdge, "selected edge has no scale");
  std::vector<double> stats(static_cast<std::size_t>(cfg.reps));
  Eigen::MatrixXd b1;
  if (route == SimRoute::Manova) b1 = oneway_B_matrices(design.n, design.I, design.J).first;
  parallel_for(stats.size(), cfg.parallel_width, [&](std::size_t r) {
    double lmax = 0.0;
    if (route == SimRoute::Population) {
      lmax = sample_spectrum(pop, cfg, r).back();
    } else {
      auto rng = replicate_engine(cfg.seed, r);
      const Eigen::MatrixXd s1 = Eigen::MatrixXd::Identity(design.p, design.p) * design.sigma1_sq;
      const Eigen::MatrixXd s2 = Eigen::MatrixXd::Identity(design.p, design.p) * design.sigma2_sq;
      const Eigen::MatrixXd y = simulate_oneway(design, s1, s2, rng, cfg.entry_law);
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(manova_estimate(y, b1), Eigen::EigenvaluesOnly);
      lmax = es.eigenvalues().maxCoeff();
    }
    stats[r] = edge_statistic(edge, pop.n(), lmax);
  });
  return coverage_from_statistics(std::move(stats));
}

/// Sorted spectra of cfg.reps replicates, in replicate order.
inline std::vector<std::vector<double>> sample_spectra(const PopulationSpec& pop, const SimConfig& cfg) {
  cfg.validate();
  std::vector<std::vector<double>> out(static_cast<std::size_t>(cfg.reps));
  parallel_for(out.size(), cfg.parallel_width, [&](std::size_t r) { out[r] = sample_spectrum(pop, cfg, r); });
  return out;
}

/// Fraction of spectra with an eigenvalue farther than delta from the
/// support. Eigenvalues within delta of 0 are ignored when mu0 puts mass
/// at 0.
inline double support_adherence(const SupportReport& report, const std::vector<std::vector<double>>& spectra,
                                 double delta) {
  if (spectra.empty()) fail(ErrorKind::InvalidInput, "no spectra");
  const bool zero_mass = report.atom_at_zero > 0.0 || report.isolated_zero_flag;
  std::int64_t count = 0;
  for (const auto& ev : spectra) {
    for (double v : ev) {
      if (zero_mass && std::abs(v) <= delta) continue;
      if (report.distance_to_support(v) > delta) {
        ++count;
        break;
      }
    }
  }
  return static_cast<double>(count) / static_cast<double>(spectra.size());
}

inline double support_adherence(const PopulationSpec& pop, const SimConfig& cfg, double delta) {
  return support_adherence(find_edges(pop), sample_spectra(pop, cfg), delta);
}

/// Fraction of spectra with an eigenvalue in the exclusion zone
/// [E* + N^{-2/3+eps}, E* + delta] outside a right edge (mirrored for a left
/// edge), delta from the test window rule.
inline double edge_concentration(const SupportReport& report, const EdgeInfo& edge, double n_dim,
                                 const std::vector<std::vector<double>>& spectra, double epsilon) {
  if (spectra.empty()) fail(ErrorKind::InvalidInput, "no spectra");
  const double delta = window_delta(report, edge);
  const double inner = std::pow(n_dim, -2.0 / 3.0 + epsilon);
  const double sign = edge.side == EdgeSide::Right ? 1.0 : -1.0;
  std::int64_t count = 0;
  for (const auto& ev : spectra) {
    for (double v : ev) {
      const double d = sign * (v - edge.e_star);
      if (d >= inner && d <= delta) {
        ++count;
        break;
      }
    }
  }
  return static_cast<double>(count) / static_cast<double>(spectra.size());
}

inline double edge_concentration(const PopulationSpec& pop, const EdgeInfo& edge, const SimConfig& cfg, double epsilon,
                                 double tau = 0.05) {
  cfg.validate();
  if (!check_regularity(pop, edge, tau)) fail(ErrorKind::IrregularEdge, "edge is not regular");
  return edge_concentration(find_edges(pop), edge, pop.n(), sample_spectra(pop, cfg), epsilon);
}

struct LocalLawProbe {
  ComplexUpper z{0.0, 1.0};
  double m_N_err = 0.0;
  double entrywise_err = 0.0;
  double psi = 0.0;
  double im_m_N = 0.0;
  /// Share of the (A, B) entries within 10 psi.
  double entries_within_10psi = 0.0;
};

struct LocalLawSummary {
  std::vector<LocalLawProbe> probes;
  double median_m_N_err = 0.0;
  double median_entrywise_err = 0.0;
  /// Fraction of probes with entrywise_err <= 10 psi.
  double fraction_within_10psi = 0.0;
};

namespace detail {

inline double median(std::vector<double> v) {
  if (v.empty()) return std::nan("");
  std::sort(v.begin(), v.end());
  const std::size_t k = v.size() / 2;
  return v.size() % 2 == 1 ? v[k] : 0.5 * (v[k - 1] + v[k]);
}

/// Compares G = (Sigma_hat - z)^{-1} and its linearization blocks with the
/// deterministic equivalent
///   Pi = diag(m0 Id_N, -T (Id + m0 T)^{-1}).
/// With W = X V, the blocks of G - Pi scaled by 1/|t_A t_B| (t_i = 1 on the
/// first N indices) are G_N - m0, G_N X' and X G_N X' - m0 (Id + m0 T)^{-1}.
inline LocalLawProbe local_law_single(const PopulationDraw& d, double n_dim, cplx z, cplx m0) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(sample_matrix(d));
  const Eigen::MatrixXd& v = es.eigenvectors();
  const Eigen::VectorXd& lam = es.eigenvalues();
  const Eigen::Index n = lam.size();
  Eigen::VectorXd dre(n), dim(n);
  cplx trace = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    const cplx r = 1.0 / (lam(i) - z);
    dre(i) = r.real();
    dim(i) = r.imag();
    trace += r;
  }
  const cplx m_n = trace / n_dim;
  LocalLawProbe out;
  out.z = ComplexUpper(z.real(), z.imag());
  out.m_N_err = std::abs(m_n - m0);
  out.im_m_N = m_n.imag();

  const double neta = n_dim * z.imag();
  out.psi = std::sqrt(m0.imag() / neta) + 1.0 / neta;
  double worst = 0.0;
  double entries = 0.0, within = 0.0;
  auto track = [&](const Eigen::MatrixXd& re, const Eigen::MatrixXd& im, auto&& shift) {
    for (Eigen::Index j = 0; j < re.cols(); ++j)
      for (Eigen::Index i = 0; i < re.rows(); ++i) {
        const double e = std::abs(cplx(re(i, j), im(i, j)) - shift(i, j));
        worst = std::max(worst, e);
        within += e <= 10.0 * out.psi ? 1.0 : 0.0;
      }
    entries += static_cast<double>(re.size());
  };
  const Eigen::MatrixXd gre = v * dre.asDiagonal() * v.transpose();
  const Eigen::MatrixXd gim = v * dim.asDiagonal() * v.transpose();
  track(gre, gim, [&](Eigen::Index i, Eigen::Index j) { return i == j ? m0 : cplx(0.0); });
  if (d.t.size() > 0) {
    const Eigen::MatrixXd w = d.x * v;
    const Eigen::MatrixXd cre = v * dre.asDiagonal() * w.transpose();
    const Eigen::MatrixXd cim = v * dim.asDiagonal() * w.transpose();
    track(cre, cim, [](Eigen::Index, Eigen::Index) { return cplx(0.0); });
    const Eigen::MatrixXd lre = w * dre.asDiagonal() * w.transpose();
    const Eigen::MatrixXd lim = w * dim.asDiagonal() * w.transpose();
    track(lre, lim, [&](Eigen::Index i, Eigen::Index j) { return i == j ? m0 / (1.0 + m0 * d.t(i)) : cplx(0.0); });
  }
  out.entrywise_err = worst;
  out.entries_within_10psi = within / entries;
  return out;
}

}  // namespace detail

/// Local-law comparison at z = E* + i eta over cfg.reps replicates.
inline LocalLawSummary local_law_probe(const PopulationSpec& pop, const EdgeInfo& edge, const SimConfig& cfg,
                                       double eta, double tau = 0.05) {
  cfg.validate();
  if (!(eta > 0.0)) fail(ErrorKind::DomainError, "eta must be positive");
  if (!check_regularity(pop, edge, tau)) fail(ErrorKind::IrregularEdge, "edge is not regular");
  const cplx z(edge.e_star, eta);
  const cplx m0 = solve_m0(pop, z);
  LocalLawSummary out;
  out.probes.resize(static_cast<std::size_t>(cfg.reps));
  parallel_for(out.probes.size(), cfg.parallel_width, [&](std::size_t r) {
    out.probes[r] = detail::local_law_single(draw_population(pop, cfg, r), pop.n(), z, m0);
  });
  std::vector<double> a, b;
  std::int64_t within = 0;
  for (const auto& p : out.probes) {
    a.push_back(p.m_N_err);
    b.push_back(p.entrywise_err);
    within += p.entrywise_err <= 10.0 * p.psi ? 1 : 0;
  }
  out.median_m_N_err = detail::median(a);
  out.median_entrywise_err = detail::median(b);
  out.fraction_within_10psi = static_cast<double>(within) / static_cast<double>(out.probes.size());
  return out;
}

}  // namespace mpedge
