#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace reebsym {

enum class ErrorCode {
  InvalidInput,
  ParseError,
  BadParameter,
  NonManifold,
  NotClosed,
  Disconnected,
  NonOrientable,
  InvalidVertex,
  NotGeneric,
  NoSuchVertex,
  NotCritical,
  SizeLimit,
  NotASubgroup,
  ConditionCViolated,
  NotWellDefined,
  NotSpecial,
  OrbitMismatch,
  TwistUnrealizable,
};

std::string_view to_string(ErrorCode code);

// Every failure raised by the library carries a machine-readable code.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace reebsym
