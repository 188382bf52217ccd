#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bihyp {

enum class ErrorCode {
  InvalidInput,
  NotInvertible,
  EmptySet,
  DimensionMismatch,
  BadIndex,
  UnsupportedSet,
  SamplingFailure,
  PreconditionFailed,
  OriginNotInterior,
  LPInfeasible,
  NumericalStall,
  UnknownProperty,
  BadInstance,
  ConfigError,
};

std::string_view error_name(ErrorCode code) noexcept;

/// Domain error raised by every module. The code names the failure class;
/// the message carries context such as the offending component index.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  [[nodiscard]] ErrorCode code() const noexcept { return code_; }
  [[nodiscard]] std::string_view name() const noexcept { return error_name(code_); }

 private:
  ErrorCode code_;
};

}  // namespace bihyp
