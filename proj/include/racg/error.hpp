#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace racg {

enum class ErrorCode {
  ParseError,
  SelfLoop,
  MixedGraph,
  TwoEndedAnomaly,
  AssumptionsFailed,
  NonTwoEndedEdge,
  CapExceeded,
  NotStable,
  Domain,
  IoError,
};

// Upper-case wire name, e.g. "PARSE_ERROR".
std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class ParseError : public Error {
 public:
  ParseError(int line, const std::string& reason);
  int line() const noexcept { return line_; }
  const std::string& reason() const noexcept { return reason_; }

 private:
  int line_;
  std::string reason_;
};

}  // namespace racg
