#pragma once

// GOE Tracy-Widom law F1 from an embedded table: monotone cubic Hermite
// interpolation inside, asymptotic tails outside.

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "mpedge/detail/tw_table_data.hpp"
#include "mpedge/error.hpp"

namespace mpedge {

inline constexpr const char* kTwTableEnv = "MPEDGE_TW_TABLE";

struct TwTailParams {
  /// log F1(s) = -|s|^3/24 - |s|^{3/2}/(3 sqrt 2) - log|s|/16 + left_log_const
  double left_log_const = 0.0;
  /// 1 - F1(s) = right_const * s^{-3/4} exp(-(2/3) s^{3/2})
  double right_const = 0.0;
};

class TWTable {
 public:
  struct Node {
    double x;
    double cdf;
    double slope;
  };

  /// Nodes need strictly increasing x and cdf. Non-finite or negative slopes
  /// are replaced by Fritsch-Carlson estimates; all slopes are then limited
  /// so that every Hermite segment is monotone.
  explicit TWTable(std::vector<Node> nodes) : nodes_(std::move(nodes)) {
    if (nodes_.size() < 4) fail(ErrorKind::InvalidInput, "TW table needs at least 4 nodes");
    for (std::size_t i = 1; i < nodes_.size(); ++i) {
      if (!(nodes_[i].x > nodes_[i - 1].x)) fail(ErrorKind::InvalidInput, "TW table x not increasing");
      if (!(nodes_[i].cdf > nodes_[i - 1].cdf)) fail(ErrorKind::InvalidInput, "TW table cdf not increasing");
    }
    for (const auto& nd : nodes_)
      if (!(nd.cdf > 0.0 && nd.cdf < 1.0)) fail(ErrorKind::InvalidInput, "TW table cdf outside (0,1)");
    limit_slopes();
    const auto& lo = nodes_.front();
    const auto& hi = nodes_.back();
    tails_.left_log_const = std::log(lo.cdf) - left_shape(lo.x);
    tails_.right_const = (1.0 - hi.cdf) / right_shape(hi.x);
  }

  static TWTable embedded() {
    std::vector<Node> nodes;
    nodes.reserve(detail::kTwTable.size());
    for (const auto& nd : detail::kTwTable) nodes.push_back({nd.x, nd.cdf, nd.pdf});
    return TWTable(std::move(nodes));
  }

  /// CSV with columns x,cdf[,pdf]; lines starting with '#' and a non-numeric
  /// header are skipped.
  static TWTable from_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorKind::InvalidInput, "cannot open TW table " + path);
    std::vector<Node> nodes;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      if (line.empty() || line[0] == '#') continue;
      std::stringstream ss(line);
      std::vector<double> cols;
      std::string cell;
      bool numeric = true;
      while (std::getline(ss, cell, ',')) {
        try {
          std::size_t used = 0;
          cols.push_back(std::stod(cell, &used));
        } catch (const std::exception&) {
          numeric = false;
          break;
        }
      }
      if (!numeric) {
        if (nodes.empty()) continue;
        fail(ErrorKind::InvalidInput, path + ":" + std::to_string(lineno) + ": non-numeric row");
      }
      if (cols.size() < 2) fail(ErrorKind::InvalidInput, path + ":" + std::to_string(lineno) + ": need x,cdf");
      nodes.push_back({cols[0], cols[1], cols.size() > 2 ? cols[2] : std::nan("")});
    }
    return TWTable(std::move(nodes));
  }

  /// Embedded table unless the environment names an override file.
  static const TWTable& instance() {
    static const TWTable table = [] {
      if (const char* path = std::getenv(kTwTableEnv); path != nullptr && *path != '\0') return from_csv(path);
      return embedded();
    }();
    return table;
  }

  const std::vector<Node>& nodes() const { return nodes_; }
  const TwTailParams& tails() const { return tails_; }
  double x_min() const { return nodes_.front().x; }
  double x_max() const { return nodes_.back().x; }

  double cdf(double x) const {
    if (std::isnan(x)) return x;
    if (x <= x_min()) {
      if (std::isinf(x)) return 0.0;
      return std::exp(left_shape(x) + tails_.left_log_const);
    }
    if (x >= x_max()) {
      if (std::isinf(x)) return 1.0;
      return 1.0 - tails_.right_const * right_shape(x);
    }
    const std::size_t i = segment(x);
    const Node& a = nodes_[i];
    const Node& b = nodes_[i + 1];
    const double h = b.x - a.x;
    const double u = (x - a.x) / h;
    const double u2 = u * u;
    const double u3 = u2 * u;
    const double v = (2 * u3 - 3 * u2 + 1) * a.cdf + (u3 - 2 * u2 + u) * h * a.slope +
                     (-2 * u3 + 3 * u2) * b.cdf + (u3 - u2) * h * b.slope;
    return std::clamp(v, a.cdf, b.cdf);
  }

  double quantile(double p) const {
    if (!(p > 0.0 && p < 1.0)) fail(ErrorKind::DomainError, "quantile level must lie in (0,1)");
    double lo = -40.0;
    double hi = 40.0;
    while (cdf(lo) >= p) lo *= 2.0;
    while (cdf(hi) <= p && hi < 1e6) hi *= 2.0;
    for (int it = 0; it < 200 && hi - lo > 1e-14 * std::max(1.0, std::abs(lo)); ++it) {
      const double mid = 0.5 * (lo + hi);
      (cdf(mid) < p ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
  }

 private:
  static double left_shape(double s) {
    const double a = std::abs(s);
    return -a * a * a / 24.0 - std::pow(a, 1.5) / (3.0 * std::numbers::sqrt2) - std::log(a) / 16.0;
  }
  static double right_shape(double s) { return std::pow(s, -0.75) * std::exp(-2.0 / 3.0 * std::pow(s, 1.5)); }

  std::size_t segment(double x) const {
    auto it = std::upper_bound(nodes_.begin(), nodes_.end(), x, [](double v, const Node& n) { return v < n.x; });
    return static_cast<std::size_t>(it - nodes_.begin()) - 1;
  }

  void limit_slopes() {
    const std::size_t n = nodes_.size();
    std::vector<double> delta(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i)
      delta[i] = (nodes_[i + 1].cdf - nodes_[i].cdf) / (nodes_[i + 1].x - nodes_[i].x);
    for (std::size_t i = 0; i < n; ++i) {
      double& d = nodes_[i].slope;
      if (std::isfinite(d) && d >= 0.0) continue;
      if (i == 0) d = delta[0];
      else if (i + 1 == n) d = delta[n - 2];
      else d = 2.0 / (1.0 / delta[i - 1] + 1.0 / delta[i]);
    }
    for (std::size_t i = 0; i + 1 < n; ++i) {
      const double a = nodes_[i].slope / delta[i];
      const double b = nodes_[i + 1].slope / delta[i];
      const double r = a * a + b * b;
      if (r > 9.0) {
        const double s = 3.0 / std::sqrt(r);
        nodes_[i].slope = s * a * delta[i];
        nodes_[i + 1].slope = s * b * delta[i];
      }
    }
  }

  std::vector<Node> nodes_;
  TwTailParams tails_;
};

inline double f1_cdf(double x) { return TWTable::instance().cdf(x); }

inline double f1_quantile(double p) { return TWTable::instance().quantile(p); }

}  // namespace mpedge
