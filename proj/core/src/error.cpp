#include "ersim/error.hpp"

namespace ersim {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "invalid-argument";
    case ErrorCode::kInsufficientProfile: return "insufficient-profile";
    case ErrorCode::kInvalidSchedule: return "invalid-schedule";
    case ErrorCode::kUndefinedDistribution: return "undefined-distribution";
    case ErrorCode::kUnsupportedFeature: return "unsupported-feature";
    case ErrorCode::kParse: return "parse-error";
    case ErrorCode::kValidation: return "validation-error";
    case ErrorCode::kEmptyReport: return "empty-report";
  }
  return "unknown";
}

}  // namespace ersim
