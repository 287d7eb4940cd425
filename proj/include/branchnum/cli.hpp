#pragma once

#include <ostream>
#include <span>
#include <string>

#include "branchnum/errors.hpp"

namespace branchnum::cli {

// Process exit codes.
inline constexpr int kOk = 0;
inline constexpr int kFailure = 1;
inline constexpr int kParseError = 2;
inline constexpr int kSingular = 3;
inline constexpr int kVerificationMismatch = 4;
inline constexpr int kResourceGuard = 5;

int exit_code_for(ErrorCode code) noexcept;

/// Runs the command line (without the program name) and returns the exit code.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace branchnum::cli
