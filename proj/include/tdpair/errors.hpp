#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tdpair {

/// Machine-readable failure categories. Every exception thrown by the library
/// carries one of these so callers (and the CLI) can map failures to exit codes
/// without parsing messages.
enum class ErrorCode {
  FieldMismatch,
  DimensionMismatch,
  DivisionByZero,
  Singular,
  NotDirect,
  NotSpanning,
  NotSplit,
  NotDiagonalizable,
  NoStandardOrdering,
  Reducible,
  IrreducibilityInconclusive,
  DiameterZero,
  DiameterMismatch,
  RecurrenceViolated,
  InconsistentBase,
  PresetInvalid,
  SplitTheoremViolated,
  LadderViolated,
  RouteMismatch,
  RefinementNotDirect,
  MinpolyMismatch,
  ClosedFormMismatch,
  UnsupportedCase,
  CharTooSmall,
  IdentityFailed,
  NonUnique,
  NoSolution,
  HypothesisFailed,
  ReductionFailed,
  ParseError,
  IndexRange,
  Usage,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace tdpair
