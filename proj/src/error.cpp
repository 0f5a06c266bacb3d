#include "progressio/error.hpp"

namespace progressio {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::BothZero: return "BothZero";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::ConstantPolynomial: return "ConstantPolynomial";
    case ErrorCode::RetryBudgetExhausted: return "RetryBudgetExhausted";
    case ErrorCode::NoValidE: return "NoValidE";
    case ErrorCode::FieldExhausted: return "FieldExhausted";
    case ErrorCode::FieldTooSmall: return "FieldTooSmall";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::DegreeDrop: return "DegreeDrop";
    case ErrorCode::NonSquarefreeUnramifiedPart: return "NonSquarefreeUnramifiedPart";
    case ErrorCode::ClauseFailed: return "ClauseFailed";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace progressio
