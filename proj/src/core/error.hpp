#pragma once

#include <stdexcept>
#include <string>

namespace cascade {

enum class ErrorCode {
  InvalidArgument = 1,
  InvalidBase,
  NotPrime,
  NotApplicable,
  NegationPresent,
  NotBinaryState,
  StateCountMismatch,
  SymbolOutOfRange,
  SeedTooShort,
  BudgetExceeded,
  DegenerateDistribution,
  DegenerateChain,
  NoInteriorRoot,
  ToleranceNotMet,
  InvalidMu,
  ParseError,
  Overflow,
  Internal,
};

inline const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::InvalidBase: return "InvalidBase";
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::NotApplicable: return "NotApplicable";
    case ErrorCode::NegationPresent: return "NegationPresent";
    case ErrorCode::NotBinaryState: return "NotBinaryState";
    case ErrorCode::StateCountMismatch: return "StateCountMismatch";
    case ErrorCode::SymbolOutOfRange: return "SymbolOutOfRange";
    case ErrorCode::SeedTooShort: return "SeedTooShort";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::DegenerateDistribution: return "DegenerateDistribution";
    case ErrorCode::DegenerateChain: return "DegenerateChain";
    case ErrorCode::NoInteriorRoot: return "NoInteriorRoot";
    case ErrorCode::ToleranceNotMet: return "ToleranceNotMet";
    case ErrorCode::InvalidMu: return "InvalidMu";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace cascade
