#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "mpedge/error.hpp"

namespace mpedge {

/// One diagonal value of T together with how many times it occurs.
struct PopulationEntry {
  double t = 0.0;
  std::int64_t mult = 0;

  friend bool operator==(const PopulationEntry&, const PopulationEntry&) = default;
};

/// Admissible ranges for a population. The ratio band bounds M/N from both
/// sides and the magnitude bound applies to every diagonal value.
struct PopulationBounds {
  double ratio_lo = 1.0 / 20.0;
  double ratio_hi = 20.0;
  double max_abs_t = 1e3;
};

/// The diagonal matrix T = diag(t_1, ..., t_M) stored as merged
/// (value, multiplicity) pairs, plus the column dimension N of X.
///
/// Entries are kept sorted by value with equal values merged, so there is at
/// most one zero entry. Construction validates the bounds and throws
/// ErrorKind::InvalidInput on violation.
class PopulationSpec {
 public:
  PopulationSpec() = default;

  PopulationSpec(std::vector<PopulationEntry> entries, std::int64_t n_dim,
                 const PopulationBounds& bounds = {})
      : n_dim_(n_dim) {
    if (n_dim <= 0) fail(ErrorKind::InvalidInput, "n_dim must be a positive integer");
    if (entries.empty()) fail(ErrorKind::InvalidInput, "entries must not be empty");
    for (const auto& e : entries) {
      if (!std::isfinite(e.t)) fail(ErrorKind::InvalidInput, "entry value is not finite");
      if (e.mult <= 0) fail(ErrorKind::InvalidInput, "multiplicities must be positive");
      if (std::abs(e.t) > bounds.max_abs_t) {
        fail(ErrorKind::InvalidInput,
             "entry |t| = " + std::to_string(std::abs(e.t)) + " exceeds bound " +
                 std::to_string(bounds.max_abs_t));
      }
    }
    std::sort(entries.begin(), entries.end(),
              [](const PopulationEntry& a, const PopulationEntry& b) { return a.t < b.t; });
    for (const auto& e : entries) {
      if (!entries_.empty() && entries_.back().t == e.t) {
        entries_.back().mult += e.mult;
      } else {
        entries_.push_back(e);
      }
    }
    for (const auto& e : entries_) m_total_ += e.mult;
    const double ratio = static_cast<double>(m_total_) / static_cast<double>(n_dim_);
    if (ratio < bounds.ratio_lo || ratio > bounds.ratio_hi) {
      fail(ErrorKind::InvalidInput, "M/N = " + std::to_string(ratio) + " outside [" +
                                        std::to_string(bounds.ratio_lo) + ", " +
                                        std::to_string(bounds.ratio_hi) + "]");
    }
  }

  /// Builds a population from an explicit diagonal t_1, ..., t_M.
  static PopulationSpec from_diagonal(std::span<const double> diag, std::int64_t n_dim,
                                      const PopulationBounds& bounds = {}) {
    std::vector<PopulationEntry> entries;
    entries.reserve(diag.size());
    for (double t : diag) entries.push_back({t, 1});
    return PopulationSpec(std::move(entries), n_dim, bounds);
  }

  std::span<const PopulationEntry> entries() const { return entries_; }
  std::int64_t n_dim() const { return n_dim_; }
  /// M, the number of diagonal entries counted with multiplicity.
  std::int64_t total_mult() const { return m_total_; }
  double n() const { return static_cast<double>(n_dim_); }

  std::int64_t zero_mult() const {
    for (const auto& e : entries_)
      if (e.t == 0.0) return e.mult;
    return 0;
  }
  std::int64_t rank() const { return m_total_ - zero_mult(); }
  bool all_zero() const { return rank() == 0; }

  double max_abs_t() const {
    double out = 0.0;
    for (const auto& e : entries_) out = std::max(out, std::abs(e.t));
    return out;
  }

  /// Expanded diagonal in sorted order.
  std::vector<double> diagonal() const {
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(m_total_));
    for (const auto& e : entries_) out.insert(out.end(), static_cast<std::size_t>(e.mult), e.t);
    return out;
  }

  /// T -> c T, for c != 0. Bounds are not re-checked.
  PopulationSpec scaled(double c) const {
    PopulationSpec out = *this;
    for (auto& e : out.entries_) e.t *= c;
    if (c < 0) std::reverse(out.entries_.begin(), out.entries_.end());
    return out;
  }

  /// T -> -T.
  PopulationSpec reflected() const { return scaled(-1.0); }

  /// Same spectral law with every multiplicity and N multiplied by k.
  PopulationSpec duplicated(std::int64_t k) const {
    PopulationSpec out = *this;
    for (auto& e : out.entries_) e.mult *= k;
    out.m_total_ *= k;
    out.n_dim_ *= k;
    return out;
  }

  friend bool operator==(const PopulationSpec&, const PopulationSpec&) = default;

 private:
  std::vector<PopulationEntry> entries_;
  std::int64_t n_dim_ = 0;
  std::int64_t m_total_ = 0;
};

}  // namespace mpedge
