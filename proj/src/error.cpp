#include "bihyp/error.hpp"

namespace bihyp {

std::string_view error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::NotInvertible: return "NotInvertible";
    case ErrorCode::EmptySet: return "EmptySet";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::BadIndex: return "BadIndex";
    case ErrorCode::UnsupportedSet: return "UnsupportedSet";
    case ErrorCode::SamplingFailure: return "SamplingFailure";
    case ErrorCode::PreconditionFailed: return "PreconditionFailed";
    case ErrorCode::OriginNotInterior: return "OriginNotInterior";
    case ErrorCode::LPInfeasible: return "LPInfeasible";
    case ErrorCode::NumericalStall: return "NumericalStall";
    case ErrorCode::UnknownProperty: return "UnknownProperty";
    case ErrorCode::BadInstance: return "BadInstance";
    case ErrorCode::ConfigError: return "ConfigError";
  }
  return "Unknown";
}

}  // namespace bihyp
