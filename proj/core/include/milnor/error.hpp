#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace milnor {

enum class ErrorCode {
  DimensionMismatch,
  IndexOutOfRange,
  EvaluationOnZeroSet,
  ConstantTermPresent,
  NotWeightedHomogeneous,
  PointOnLink,
  OffSphere,
  CertificateRequired,
  NotHomogeneous,
  RootFindingDidNotConverge,
  DegenerateSpan,
  ZeroVector,
  NotSingular,
  NotAFold,
  InvariantViolation,
  UnknownSuite,
  ParseError,
  InvalidArgument,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so
/// callers (the CLI in particular) can map them onto exit statuses.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, int line, int column);

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace milnor
