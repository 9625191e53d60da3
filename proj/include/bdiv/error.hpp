#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bdiv {

enum class ErrorCode {
  kEmpty,
  kNegativeEntry,
  kNonFiniteEntry,
  kSumNotOne,
  kSizeMismatch,
  kMarginalMismatch,
  kNonpositiveK,
  kNonpositiveScale,
  kInvalidSigma,
  kMissingJoint,
  kZeroProbabilityLetter,
  kEpsilonOutOfRange,
  kUnsupportedKind,
  kNoCrossing,
  kUnknownMeasure,
  kInvalidArgument,
  kParse,
};

/// Upper-snake name of an error code, e.g. "SUM_NOT_ONE".
constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kEmpty: return "EMPTY";
    case ErrorCode::kNegativeEntry: return "NEGATIVE_ENTRY";
    case ErrorCode::kNonFiniteEntry: return "NON_FINITE_ENTRY";
    case ErrorCode::kSumNotOne: return "SUM_NOT_ONE";
    case ErrorCode::kSizeMismatch: return "SIZE_MISMATCH";
    case ErrorCode::kMarginalMismatch: return "MARGINAL_MISMATCH";
    case ErrorCode::kNonpositiveK: return "NONPOSITIVE_K";
    case ErrorCode::kNonpositiveScale: return "NONPOSITIVE_SCALE";
    case ErrorCode::kInvalidSigma: return "INVALID_SIGMA";
    case ErrorCode::kMissingJoint: return "MISSING_JOINT";
    case ErrorCode::kZeroProbabilityLetter: return "ZERO_PROBABILITY_LETTER";
    case ErrorCode::kEpsilonOutOfRange: return "EPSILON_OUT_OF_RANGE";
    case ErrorCode::kUnsupportedKind: return "UNSUPPORTED_KIND";
    case ErrorCode::kNoCrossing: return "NO_CROSSING";
    case ErrorCode::kUnknownMeasure: return "UNKNOWN_MEASURE";
    case ErrorCode::kInvalidArgument: return "INVALID_ARGUMENT";
    case ErrorCode::kParse: return "PARSE_ERROR";
  }
  return "UNKNOWN";
}

/// Thrown by every validating operation in the library. The code is stable and
/// machine-checkable; the message carries the offending values.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace bdiv
