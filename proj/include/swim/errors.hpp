#pragma once

#include <stdexcept>
#include <string>

namespace swim {

enum class ErrorKind {
  InvalidGeometry,
  Ambiguous,
  NonPositiveDiffusion,
  DegenerateAspect,
  SingularPoint,
  InsideSphere,
  OutOfFilm,
  OverlappingSwimmers,
  SingularSystem,
  RigidityViolation,
  SeriesOutOfRange,
  DegenerateD,
  StepUnderflow,
  ConfigError,
};

const char* to_string(ErrorKind kind);

// Every failure raised by the library carries a kind so front ends can map it
// to an exit status without parsing messages.
class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

private:
  ErrorKind kind_;
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
  case ErrorKind::InvalidGeometry: return "InvalidGeometry";
  case ErrorKind::Ambiguous: return "Ambiguous";
  case ErrorKind::NonPositiveDiffusion: return "NonPositiveDiffusion";
  case ErrorKind::DegenerateAspect: return "DegenerateAspect";
  case ErrorKind::SingularPoint: return "SingularPoint";
  case ErrorKind::InsideSphere: return "InsideSphere";
  case ErrorKind::OutOfFilm: return "OutOfFilm";
  case ErrorKind::OverlappingSwimmers: return "OverlappingSwimmers";
  case ErrorKind::SingularSystem: return "SingularSystem";
  case ErrorKind::RigidityViolation: return "RigidityViolation";
  case ErrorKind::SeriesOutOfRange: return "SeriesOutOfRange";
  case ErrorKind::DegenerateD: return "DegenerateD";
  case ErrorKind::StepUnderflow: return "StepUnderflow";
  case ErrorKind::ConfigError: return "ConfigError";
  }
  return "Error";
}

} // namespace swim
