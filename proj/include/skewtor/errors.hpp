#pragma once

#include <stdexcept>
#include <string>

namespace skewtor {

enum class ErrorCode {
  TauNotInUpperHalfPlane,
  TruncationToleranceNotMet,
  RepresentativeOutOfRange,
  SingularCoefficient,
  UnmappedGenerator,
  ZeroRelation,
  NonOrientable,
  StepBudgetExceeded,
  CompletionBudgetExceeded,
  NotCompleted,
  ZeroQEntry,
  ZeroArgument,
  GeneratorMismatch,
  NotCoprime,
  DimensionZero,
  ParseError,
};

inline const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::TauNotInUpperHalfPlane: return "TauNotInUpperHalfPlane";
    case ErrorCode::TruncationToleranceNotMet: return "TruncationToleranceNotMet";
    case ErrorCode::RepresentativeOutOfRange: return "RepresentativeOutOfRange";
    case ErrorCode::SingularCoefficient: return "SingularCoefficient";
    case ErrorCode::UnmappedGenerator: return "UnmappedGenerator";
    case ErrorCode::ZeroRelation: return "ZeroRelation";
    case ErrorCode::NonOrientable: return "NonOrientable";
    case ErrorCode::StepBudgetExceeded: return "StepBudgetExceeded";
    case ErrorCode::CompletionBudgetExceeded: return "CompletionBudgetExceeded";
    case ErrorCode::NotCompleted: return "NotCompleted";
    case ErrorCode::ZeroQEntry: return "ZeroQEntry";
    case ErrorCode::ZeroArgument: return "ZeroArgument";
    case ErrorCode::GeneratorMismatch: return "GeneratorMismatch";
    case ErrorCode::NotCoprime: return "NotCoprime";
    case ErrorCode::DimensionZero: return "DimensionZero";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "UnknownError";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace skewtor
