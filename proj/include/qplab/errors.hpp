#pragma once

#include <stdexcept>
#include <string>

namespace qplab {

enum class ErrorCode {
  DivisionByZero,
  NotCoprime,
  DimensionTooLarge,
  IncompatibleAction,
  NotNormal,
  OrderTooLarge,
  CosetLimitExceeded,
  ChainInconsistent,
  NonIntegral,
  NonIntegralGenus,
  IdentityElement,
  VerificationFailed,
  CurveMismatch,
  NotSquarefree,
  OutOfRange,
  NoSolution,
  MTooLarge,
  ConditionFailed,
  NonIntegralDimension,
  NonIntegralMultiplicity,
  RationalityFailed,
  IdentityFailed,
  UnknownGeneratorName,
  ParseError,
  InvalidArgument,
  CacheCorrupt,
  Internal,
};

const char* error_name(ErrorCode code) noexcept;

// Single exception type for the whole toolkit; the code identifies the
// contract violation, the message carries the witness.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace qplab
