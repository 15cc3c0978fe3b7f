#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fairdiv {

enum class ErrorCode {
  ParseError,
  InvalidInstance,
  InvalidAllocation,
  InvalidItem,
  InvalidArgument,
  TooLargeForExhaustiveCheck,
  TooLarge,
  UnsupportedValuation,
  NotCommon,
  NotCommonOrder,
  NotBoundedInterval,
  NotDistinctFavorites,
  NotDistinctTiers,
  HypothesisViolated,
  InfeasibleParams,
  BuilderPostconditionFailed,
  TierExtensionNotFound,
  NoSourceAfterDecycle,
  InternalInvariant,
};

/// Coarse classification used by the C API and the CLI exit codes.
enum class ErrorClass { User, Hypothesis, TooLarge, Internal };

std::string_view to_string(ErrorCode code);
ErrorClass classify(ErrorCode code);

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& message);

}  // namespace fairdiv
