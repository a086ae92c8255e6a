#include "rees/error.hpp"

namespace rees {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonCoprime: return "NonCoprime";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::NoSolution: return "NoSolution";
    case ErrorCode::SigmaQZero: return "SigmaQZero";
    case ErrorCode::RankMismatch: return "RankMismatch";
    case ErrorCode::ZeroElement: return "ZeroElement";
    case ErrorCode::NotGroebner: return "NotGroebner";
    case ErrorCode::NonTermination: return "NonTermination";
    case ErrorCode::RequiresUGreaterOne: return "RequiresUGreaterOne";
    case ErrorCode::StabilityViolation: return "StabilityViolation";
    case ErrorCode::NotHomogeneous: return "NotHomogeneous";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::BelowAdjointThreshold: return "BelowAdjointThreshold";
    case ErrorCode::DeadlineExceeded: return "DeadlineExceeded";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

}  // namespace rees
