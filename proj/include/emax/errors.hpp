#ifndef EMAX_ERRORS_HPP
#define EMAX_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace emax {

enum class ErrorKind {
  InvalidArgument,
  InvalidDegree,
  OutOfCone,
  CaseTwoOutOfRange,
  WrongSurface,
  NotNegativeCurvature,
  SingularDenominator,
  NotASolution,
  BoundaryViolation,
  NoSignChange,
  EmptyScan,
};

std::string_view to_string(ErrorKind kind);

/// Domain error raised by the library. Programming errors (broken internal
/// invariants) use std::logic_error instead.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::InvalidDegree: return "InvalidDegree";
    case ErrorKind::OutOfCone: return "OutOfCone";
    case ErrorKind::CaseTwoOutOfRange: return "CaseTwoOutOfRange";
    case ErrorKind::WrongSurface: return "WrongSurface";
    case ErrorKind::NotNegativeCurvature: return "NotNegativeCurvature";
    case ErrorKind::SingularDenominator: return "SingularDenominator";
    case ErrorKind::NotASolution: return "NotASolution";
    case ErrorKind::BoundaryViolation: return "BoundaryViolation";
    case ErrorKind::NoSignChange: return "NoSignChange";
    case ErrorKind::EmptyScan: return "EmptyScan";
  }
  return "Unknown";
}

}  // namespace emax

#endif  // EMAX_ERRORS_HPP
