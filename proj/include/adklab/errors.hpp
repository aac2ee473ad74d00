#pragma once

#include <stdexcept>
#include <string>

namespace adklab {

// Analysis failures are data for the CLI layer: every error carries a stable
// code so reports can be machine-checked.
enum class ErrorCode {
  ParseError,
  SpaceMismatch,
  PointOutsideSpace,
  UnsupportedShape,
  NegativeValue,
  NotContinuous,
  CriticalObstruction,
  OmegaCriticalObstruction,
  WindowTooSmall,
  InvalidModel,
  InvalidFunction,
  Internal,
};

inline const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::SpaceMismatch: return "SpaceMismatch";
    case ErrorCode::PointOutsideSpace: return "PointOutsideSpace";
    case ErrorCode::UnsupportedShape: return "UnsupportedShape";
    case ErrorCode::NegativeValue: return "NegativeValue";
    case ErrorCode::NotContinuous: return "NotContinuous";
    case ErrorCode::CriticalObstruction: return "CriticalObstruction";
    case ErrorCode::OmegaCriticalObstruction: return "OmegaCriticalObstruction";
    case ErrorCode::WindowTooSmall: return "WindowTooSmall";
    case ErrorCode::InvalidModel: return "InvalidModel";
    case ErrorCode::InvalidFunction: return "InvalidFunction";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

class AdkError : public std::runtime_error {
 public:
  AdkError(ErrorCode code, const std::string& what, std::string detail = {})
      : std::runtime_error(what), code_(code), detail_(std::move(detail)) {}

  ErrorCode code() const { return code_; }
  const std::string& detail() const { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;  // usually a point or shape rendered as text
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what,
                              std::string detail = {}) {
  throw AdkError(code, what, std::move(detail));
}

}  // namespace adklab
