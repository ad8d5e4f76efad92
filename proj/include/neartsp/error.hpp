#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace neartsp {

enum class ErrorKind {
  ParseError,
  InvalidInstance,
  InvalidArgument,
  BudgetExceeded,
  CapExceeded,
  Disconnected,
  InvalidT,
  OddSet,
  NotEulerian,
  InvalidEndpoints,
  NotMetric,
  IncompleteCover,
  StructureViolated,
  ParityViolated,
  GenerationFailed,
  InvariantViolation,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InvalidInstance: return "InvalidInstance";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::InvalidT: return "InvalidT";
    case ErrorKind::OddSet: return "OddSet";
    case ErrorKind::NotEulerian: return "NotEulerian";
    case ErrorKind::InvalidEndpoints: return "InvalidEndpoints";
    case ErrorKind::NotMetric: return "NotMetric";
    case ErrorKind::IncompleteCover: return "IncompleteCover";
    case ErrorKind::StructureViolated: return "StructureViolated";
    case ErrorKind::ParityViolated: return "ParityViolated";
    case ErrorKind::GenerationFailed: return "GenerationFailed";
    case ErrorKind::InvariantViolation: return "InvariantViolation";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

// Internal consistency check. A failure means a bug, never bad input.
inline void ensure(bool condition, const char* what) {
  if (!condition) fail(ErrorKind::InvariantViolation, what);
}

// Process exit status used by the command-line front end.
constexpr int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError:
    case ErrorKind::InvalidInstance:
    case ErrorKind::InvalidArgument:
    case ErrorKind::NotMetric:
    case ErrorKind::InvalidT:
    case ErrorKind::OddSet:
    case ErrorKind::InvalidEndpoints:
    case ErrorKind::GenerationFailed:
      return 2;
    case ErrorKind::CapExceeded:
    case ErrorKind::BudgetExceeded:
      return 3;
    default:
      return 4;
  }
}

}  // namespace neartsp
