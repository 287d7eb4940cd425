#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace branchnum {

enum class ErrorCode {
  NotPrime,
  Reducible,
  DegreeMismatch,
  InvOfZero,
  DimensionMismatch,
  FieldMismatch,
  Singular,
  OutOfRange,
  TooLarge,
  DomainError,
  MissingLinear,
  Parse,
  EntryOutOfField,
  VerificationMismatch,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace branchnum
