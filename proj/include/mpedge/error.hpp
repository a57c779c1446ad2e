#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mpedge {

enum class ErrorKind {
  InvalidInput,
  PoleProximity,
  NonConvergence,
  UndefinedAtZero,
  SolverDisagreement,
  DegeneratePopulation,
  BracketFailure,
  NoSuchEdge,
  DomainError,
  DesignError,
  ShapeError,
  ClusterAmbiguity,
  IrregularEdge,
  EmptyWindow,
  SwapRejected,
  RegularityLost,
  NotSwappable,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::PoleProximity: return "PoleProximity";
    case ErrorKind::NonConvergence: return "NonConvergence";
    case ErrorKind::UndefinedAtZero: return "UndefinedAtZero";
    case ErrorKind::SolverDisagreement: return "SolverDisagreement";
    case ErrorKind::DegeneratePopulation: return "DegeneratePopulation";
    case ErrorKind::BracketFailure: return "BracketFailure";
    case ErrorKind::NoSuchEdge: return "NoSuchEdge";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::DesignError: return "DesignError";
    case ErrorKind::ShapeError: return "ShapeError";
    case ErrorKind::ClusterAmbiguity: return "ClusterAmbiguity";
    case ErrorKind::IrregularEdge: return "IrregularEdge";
    case ErrorKind::EmptyWindow: return "EmptyWindow";
    case ErrorKind::SwapRejected: return "SwapRejected";
    case ErrorKind::RegularityLost: return "RegularityLost";
    case ErrorKind::NotSwappable: return "NotSwappable";
  }
  return "Unknown";
}

/// Every failure raised by the library carries a machine-readable kind so
/// that callers (and the CLI exit-code mapping) can branch on it.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace mpedge
