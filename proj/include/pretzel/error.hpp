#pragma once

#include <stdexcept>
#include <string>

namespace pretzel {

enum class ErrorCode {
  InvalidTuple,
  NotAKnot,
  NotOddKnot,
  EulerZero,
  SignatureNonzero,
  NotFiveStranded,
  InvalidGraph,
  InvalidSolution,
  DegenerateLattice,
  DimensionTooLarge,
  InvalidBound,
};

const char* to_string(ErrorCode code);

class PretzelError : public std::runtime_error {
 public:
  PretzelError(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace pretzel
