#pragma once

#include <stdexcept>
#include <string>

namespace stern {

enum class ErrorKind {
  DivisionNotExact,
  VariableMismatch,
  ZeroPolynomial,
  InsufficientTerms,
  RowTooLarge,
  SupportTooLarge,
  DimensionMismatch,
  EmptyPattern,
  KernelConstantTermZero,
  SymmetryInvalid,
  ClosureBudgetExceeded,
  NotSymmetrizable,
  FitInconsistent,
  ParseError,
  InvalidArgument,
};

const char* kind_name(ErrorKind kind);

// All library failures are reported through this one exception type; the
// kind is what callers (and the CLI) dispatch on.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace stern
