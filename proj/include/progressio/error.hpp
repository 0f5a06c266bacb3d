#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace progressio {

enum class ErrorCode {
  NotPrime,
  OutOfRange,
  DivisionByZero,
  FieldMismatch,
  BothZero,
  ZeroPolynomial,
  ConstantPolynomial,
  RetryBudgetExhausted,
  NoValidE,
  FieldExhausted,
  FieldTooSmall,
  PreconditionViolated,
  DegreeDrop,
  NonSquarefreeUnramifiedPart,
  ClauseFailed,
  TooLarge,
  ParseError,
};

std::string_view to_string(ErrorCode code) noexcept;

// Every failure raised by the library carries one of the codes above; the
// message names the violated precondition.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace progressio
