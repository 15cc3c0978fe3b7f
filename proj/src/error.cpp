#include "fairdiv/error.hpp"

namespace fairdiv {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidInstance: return "InvalidInstance";
    case ErrorCode::InvalidAllocation: return "InvalidAllocation";
    case ErrorCode::InvalidItem: return "InvalidItem";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::TooLargeForExhaustiveCheck: return "TooLargeForExhaustiveCheck";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::UnsupportedValuation: return "UnsupportedValuation";
    case ErrorCode::NotCommon: return "NotCommon";
    case ErrorCode::NotCommonOrder: return "NotCommonOrder";
    case ErrorCode::NotBoundedInterval: return "NotBoundedInterval";
    case ErrorCode::NotDistinctFavorites: return "NotDistinctFavorites";
    case ErrorCode::NotDistinctTiers: return "NotDistinctTiers";
    case ErrorCode::HypothesisViolated: return "HypothesisViolated";
    case ErrorCode::InfeasibleParams: return "InfeasibleParams";
    case ErrorCode::BuilderPostconditionFailed: return "BuilderPostconditionFailed";
    case ErrorCode::TierExtensionNotFound: return "TierExtensionNotFound";
    case ErrorCode::NoSourceAfterDecycle: return "NoSourceAfterDecycle";
    case ErrorCode::InternalInvariant: return "InternalInvariant";
  }
  return "Unknown";
}

ErrorClass classify(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError:
    case ErrorCode::InvalidInstance:
    case ErrorCode::InvalidAllocation:
    case ErrorCode::InvalidItem:
    case ErrorCode::InvalidArgument:
      return ErrorClass::User;
    case ErrorCode::TooLargeForExhaustiveCheck:
    case ErrorCode::TooLarge:
      return ErrorClass::TooLarge;
    case ErrorCode::UnsupportedValuation:
    case ErrorCode::NotCommon:
    case ErrorCode::NotCommonOrder:
    case ErrorCode::NotBoundedInterval:
    case ErrorCode::NotDistinctFavorites:
    case ErrorCode::NotDistinctTiers:
    case ErrorCode::HypothesisViolated:
    case ErrorCode::InfeasibleParams:
      return ErrorClass::Hypothesis;
    case ErrorCode::BuilderPostconditionFailed:
    case ErrorCode::TierExtensionNotFound:
    case ErrorCode::NoSourceAfterDecycle:
    case ErrorCode::InternalInvariant:
      return ErrorClass::Internal;
  }
  return ErrorClass::Internal;
}

void fail(ErrorCode code, const std::string& message) { throw Error(code, message); }

}  // namespace fairdiv
