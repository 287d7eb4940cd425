#include "branchnum/errors.hpp"

namespace branchnum {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::Reducible: return "Reducible";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::InvOfZero: return "InvOfZero";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::Singular: return "Singular";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::MissingLinear: return "MissingLinear";
    case ErrorCode::Parse: return "ParseError";
    case ErrorCode::EntryOutOfField: return "EntryOutOfField";
    case ErrorCode::VerificationMismatch: return "VerificationMismatch";
  }
  return "Unknown";
}

}  // namespace branchnum
