#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace triplepoint {

enum class ErrorCode {
  InvalidArgument,
  UnsupportedIndex,
  ParseError,
  InvalidGraph,
  EigenvalueMismatch,
  NoConvergence,
  NormMismatch,
  NotATriplePoint,
  SupertransitivityMismatch,
  NoUnitaryPhase,
  DimensionSumMismatch,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Syntax error in a graph file; `line()` is 1-based, 0 if unknown.
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& message);

  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace triplepoint
