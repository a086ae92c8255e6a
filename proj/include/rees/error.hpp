#pragma once

#include <stdexcept>
#include <string>

namespace rees {

enum class ErrorCode {
  NonCoprime,
  OutOfRange,
  IndexOutOfRange,
  NoSolution,
  SigmaQZero,
  RankMismatch,
  ZeroElement,
  NotGroebner,
  NonTermination,
  RequiresUGreaterOne,
  StabilityViolation,
  NotHomogeneous,
  DegreeMismatch,
  BelowAdjointThreshold,
  DeadlineExceeded,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace rees
