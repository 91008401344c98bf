// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace divlab {

enum class ErrorCode {
  EmptyAlphabet,
  DuplicateLetter,
  LengthMismatch,
  NegativeMass,
  MassNotUnit,
  IndexOutOfRange,
  EpsilonOutOfRange,
  XiOutOfRange,
  AlphabetMismatch,
  MarginalMismatch,
  NonPositiveK,
  MissingJoint,
  UnsupportedMeasure,
  NonPositiveCost,
  ZeroProbabilityLetter,
  AnswerOutOfRange,
  UnknownQuestion,
  MissingScore,
  UnknownCandidate,
  UnknownCriterion,
  GridEmpty,
  BadMeasureSpec,
  BadArgument,
};

const char* to_string(ErrorCode code);

/// Validation failure on otherwise well-formed input. The CLI maps this to
/// exit code 1.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// File or stream failure. The CLI maps this to exit code 2.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace divlab
