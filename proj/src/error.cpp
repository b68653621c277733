#include "racg/error.hpp"

namespace racg {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError: return "PARSE_ERROR";
    case ErrorCode::SelfLoop: return "SELF_LOOP";
    case ErrorCode::MixedGraph: return "MIXED_GRAPH";
    case ErrorCode::TwoEndedAnomaly: return "TWO_ENDED_ANOMALY";
    case ErrorCode::AssumptionsFailed: return "ASSUMPTIONS_FAILED";
    case ErrorCode::NonTwoEndedEdge: return "NON_TWO_ENDED_EDGE";
    case ErrorCode::CapExceeded: return "CAP_EXCEEDED";
    case ErrorCode::NotStable: return "NOT_STABLE";
    case ErrorCode::Domain: return "DOMAIN";
    case ErrorCode::IoError: return "IO_ERROR";
  }
  return "UNKNOWN";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

ParseError::ParseError(int line, const std::string& reason)
    : Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + reason),
      line_(line),
      reason_(reason) {}

}  // namespace racg
