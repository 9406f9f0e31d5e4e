#pragma once

#include <stdexcept>
#include <string>

namespace connsum {

enum class ErrorKind {
  UndefinedArithmetic,
  DomainError,
  EmptyUpArrowOnInfinity,
  NotPeelable,
  NoEmptyComponent,
  NotTransportableStep,
  NotTransportable,
  DualConditionViolated,
  ZeroVariable,
  DivergentInput,
  GuardViolation,
  AlphabetViolation,
  NotA0,
  TruncationTooSmall,
  HypothesisViolated,
  PreconditionViolated,
  NotConverged,
  ParseError,
  Internal,
};

const char* error_kind_name(ErrorKind kind);

// Every failure raised by the library carries a machine-readable kind so the
// CLI can map it onto an exit code.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::UndefinedArithmetic: return "UndefinedArithmetic";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::EmptyUpArrowOnInfinity: return "EmptyUpArrowOnInfinity";
    case ErrorKind::NotPeelable: return "NotPeelable";
    case ErrorKind::NoEmptyComponent: return "NoEmptyComponent";
    case ErrorKind::NotTransportableStep: return "NotTransportableStep";
    case ErrorKind::NotTransportable: return "NotTransportable";
    case ErrorKind::DualConditionViolated: return "DualConditionViolated";
    case ErrorKind::ZeroVariable: return "ZeroVariable";
    case ErrorKind::DivergentInput: return "DivergentInput";
    case ErrorKind::GuardViolation: return "GuardViolation";
    case ErrorKind::AlphabetViolation: return "AlphabetViolation";
    case ErrorKind::NotA0: return "NotA0";
    case ErrorKind::TruncationTooSmall: return "TruncationTooSmall";
    case ErrorKind::HypothesisViolated: return "HypothesisViolated";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::NotConverged: return "NotConverged";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace connsum
