#pragma once

// Replicate-indexed random streams and the entry laws for X.

#include <Eigen/Dense>
#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>

#include "mpedge/error.hpp"

namespace mpedge {

enum class EntryLaw { Gaussian, Rademacher };

constexpr std::string_view to_string(EntryLaw law) { return law == EntryLaw::Gaussian ? "gaussian" : "rademacher"; }

inline EntryLaw parse_entry_law(std::string_view s) {
  if (s == "gaussian") return EntryLaw::Gaussian;
  if (s == "rademacher") return EntryLaw::Rademacher;
  fail(ErrorKind::InvalidInput, "unknown entry law '" + std::string(s) + "'");
}

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace detail

/// Engine for replicate `rep` of a run seeded by `seed`. Depends only on the
/// pair, so replicates can be scheduled in any order.
inline std::mt19937_64 replicate_engine(std::uint64_t seed, std::uint64_t rep) {
  const std::uint64_t a = detail::splitmix64(seed);
  const std::uint64_t b = detail::splitmix64(a ^ detail::splitmix64(rep + 0x632be59bd9b4e019ULL));
  std::seed_seq seq{static_cast<std::uint32_t>(b), static_cast<std::uint32_t>(b >> 32),
                    static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(rep)};
  return std::mt19937_64(seq);
}

/// rows x cols matrix of iid mean-zero entries with the given variance.
inline Eigen::MatrixXd draw_matrix(std::mt19937_64& rng, Eigen::Index rows, Eigen::Index cols, EntryLaw law,
                                   double variance) {
  Eigen::MatrixXd x(rows, cols);
  const double sd = std::sqrt(variance);
  if (law == EntryLaw::Gaussian) {
    std::normal_distribution<double> normal(0.0, sd);
    for (Eigen::Index j = 0; j < cols; ++j)
      for (Eigen::Index i = 0; i < rows; ++i) x(i, j) = normal(rng);
  } else {
    for (Eigen::Index j = 0; j < cols; ++j)
      for (Eigen::Index i = 0; i < rows; ++i) x(i, j) = (rng() >> 63) != 0 ? sd : -sd;
  }
  return x;
}

}  // namespace mpedge
