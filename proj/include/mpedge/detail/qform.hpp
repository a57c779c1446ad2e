#pragma once

// The reciprocal chart g(q) = z0(1/q). Its poles are {-t : t != 0}, the point
// m = inf becomes the regular point q = 0, and g' is convex between poles.

#include <complex>
#include <cstdint>
#include <vector>

#include "mpedge/population.hpp"

namespace mpedge::detail {

class QForm {
 public:
  explicit QForm(const PopulationSpec& pop) : n_(pop.n()) {
    for (const auto& e : pop.entries()) {
      if (e.t == 0.0) continue;
      t_.push_back(e.t);
      w_.push_back(static_cast<double>(e.mult) / n_);
    }
    base_ = static_cast<double>(pop.rank() - pop.n_dim()) / n_;
  }

  std::size_t size() const { return t_.size(); }
  double t(std::size_t j) const { return t_[j]; }
  double weight(std::size_t j) const { return w_[j]; }
  /// g'(0) = rank/N - 1, exact.
  double slope_at_zero() const { return base_; }

  /// g(q) = q [ (rank-N)/N - q (1/N) sum mult/(q+t) ]
  template <class S>
  S g(const S& q) const {
    S sum = 0.0;
    for (std::size_t j = 0; j < t_.size(); ++j) sum += w_[j] / (q + t_[j]);
    return q * (base_ - q * sum);
  }

  /// g'(q) = (rank-N)/N - (1/N) sum mult q (q+2t)/(q+t)^2
  template <class S>
  S g1(const S& q) const {
    S sum = 0.0;
    for (std::size_t j = 0; j < t_.size(); ++j) {
      const S d = q + t_[j];
      sum += w_[j] * q * (q + 2.0 * t_[j]) / (d * d);
    }
    return base_ - sum;
  }

  /// g''(q) = -(2/N) sum mult t^2/(q+t)^3
  template <class S>
  S g2(const S& q) const {
    S sum = 0.0;
    for (std::size_t j = 0; j < t_.size(); ++j) {
      const S d = q + t_[j];
      sum += w_[j] * t_[j] * t_[j] / (d * d * d);
    }
    return -2.0 * sum;
  }

  /// g'''(q) = (6/N) sum mult t^2/(q+t)^4 > 0
  template <class S>
  S g3(const S& q) const {
    S sum = 0.0;
    for (std::size_t j = 0; j < t_.size(); ++j) {
      const S d = q + t_[j];
      sum += w_[j] * t_[j] * t_[j] / (d * d * d * d);
    }
    return 6.0 * sum;
  }

  /// Monic coefficients (ascending powers) of the polynomial obtained by
  /// clearing denominators in g(q) = x; degree size() + 1.
  std::vector<double> cleared_polynomial(double x) const {
    // (c - x - q) prod (q + t_j) - sum_j w_j t_j^2 prod_{k != j} (q + t_k)
    double c = 0.0;
    for (std::size_t j = 0; j < t_.size(); ++j) c += w_[j] * t_[j];
    std::vector<double> prod{1.0};
    for (double tj : t_) prod = mul_linear(prod, tj);
    std::vector<double> poly(prod.size() + 1, 0.0);
    for (std::size_t i = 0; i < prod.size(); ++i) {
      poly[i] += (c - x) * prod[i];
      poly[i + 1] -= prod[i];
    }
    for (std::size_t j = 0; j < t_.size(); ++j) {
      std::vector<double> partial{1.0};
      for (std::size_t k = 0; k < t_.size(); ++k)
        if (k != j) partial = mul_linear(partial, t_[k]);
      for (std::size_t i = 0; i < partial.size(); ++i) poly[i] -= w_[j] * t_[j] * t_[j] * partial[i];
    }
    const double lead = poly.back();
    for (double& a : poly) a /= lead;
    return poly;
  }

 private:
  static std::vector<double> mul_linear(const std::vector<double>& p, double root_shift) {
    std::vector<double> out(p.size() + 1, 0.0);
    for (std::size_t i = 0; i < p.size(); ++i) {
      out[i] += root_shift * p[i];
      out[i + 1] += p[i];
    }
    return out;
  }

  double n_;
  double base_ = 0.0;
  std::vector<double> t_;
  std::vector<double> w_;
};

}  // namespace mpedge::detail
