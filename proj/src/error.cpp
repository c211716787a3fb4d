#include "stern/error.hpp"

namespace stern {

const char* kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DivisionNotExact: return "DivisionNotExact";
    case ErrorKind::VariableMismatch: return "VariableMismatch";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::InsufficientTerms: return "InsufficientTerms";
    case ErrorKind::RowTooLarge: return "RowTooLarge";
    case ErrorKind::SupportTooLarge: return "SupportTooLarge";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::EmptyPattern: return "EmptyPattern";
    case ErrorKind::KernelConstantTermZero: return "KernelConstantTermZero";
    case ErrorKind::SymmetryInvalid: return "SymmetryInvalid";
    case ErrorKind::ClosureBudgetExceeded: return "ClosureBudgetExceeded";
    case ErrorKind::NotSymmetrizable: return "NotSymmetrizable";
    case ErrorKind::FitInconsistent: return "FitInconsistent";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(kind_name(kind)) + ": " + message), kind_(kind) {}

}  // namespace stern
