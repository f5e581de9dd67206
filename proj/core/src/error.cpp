#include "milnor/error.hpp"

namespace milnor {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::EvaluationOnZeroSet: return "EvaluationOnZeroSet";
    case ErrorCode::ConstantTermPresent: return "ConstantTermPresent";
    case ErrorCode::NotWeightedHomogeneous: return "NotWeightedHomogeneous";
    case ErrorCode::PointOnLink: return "PointOnLink";
    case ErrorCode::OffSphere: return "OffSphere";
    case ErrorCode::CertificateRequired: return "CertificateRequired";
    case ErrorCode::NotHomogeneous: return "NotHomogeneous";
    case ErrorCode::RootFindingDidNotConverge: return "RootFindingDidNotConverge";
    case ErrorCode::DegenerateSpan: return "DegenerateSpan";
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::NotSingular: return "NotSingular";
    case ErrorCode::NotAFold: return "NotAFold";
    case ErrorCode::InvariantViolation: return "InvariantViolation";
    case ErrorCode::UnknownSuite: return "UnknownSuite";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

ParseError::ParseError(const std::string& message, int line, int column)
    : Error(ErrorCode::ParseError,
            message + " (line " + std::to_string(line) + ", column " + std::to_string(column) + ")"),
      line_(line),
      column_(column) {}

}  // namespace milnor
