#include "triplepoint/error.hpp"

namespace triplepoint {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::UnsupportedIndex: return "UnsupportedIndex";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidGraph: return "InvalidGraph";
    case ErrorCode::EigenvalueMismatch: return "EigenvalueMismatch";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::NormMismatch: return "NormMismatch";
    case ErrorCode::NotATriplePoint: return "NotATriplePoint";
    case ErrorCode::SupertransitivityMismatch: return "SupertransitivityMismatch";
    case ErrorCode::NoUnitaryPhase: return "NoUnitaryPhase";
    case ErrorCode::DimensionSumMismatch: return "DimensionSumMismatch";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(message), code_(code) {}

ParseError::ParseError(int line, const std::string& message)
    : Error(ErrorCode::ParseError,
            line > 0 ? "line " + std::to_string(line) + ": " + message : message),
      line_(line) {}

}  // namespace triplepoint
