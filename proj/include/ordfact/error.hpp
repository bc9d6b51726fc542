#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ordfact {

enum class ErrorCode {
  NonHermitian,
  DimensionMismatch,
  NotUnitary,
  EmptyGeneratorList,
  OutOfTableRange,
  InvalidStepCount,
  OffGrid,
  NegativeDuration,
  ParamOutOfBounds,
  BadGeneratorId,
  NoRemainingGrid,
  InvalidSliceCount,
  EmptyGrid,
  EmptyCandidates,
  SearchSpaceTooLarge,
  SyntaxError,
  NonHermitianGenerator,
  UnknownPulseFamily,
  MissingField,
  WriteFailure,
  InvalidArgument,
};

std::string_view to_string(ErrorCode code);

// Every failure in the library surfaces as this exception; code() identifies
// the condition so callers (and tests) can branch without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace ordfact
