#pragma once

// Text format for a matrix over GF(p^m):
//
//   # comment (anywhere, to end of line)
//   field 2 8 0x11D        p, m, defining polynomial in integer encoding
//   n 8
//   format hex             optional; "hex" (default) or "dec"
//   01_x 03_x 04_x ...     n rows of n entries
//
// Hex entries may carry a "_x" suffix or "0x" prefix; bare tokens are read
// in the declared format. Explicitly marked hex is accepted in "dec" files.

#include <filesystem>
#include <string>
#include <string_view>

#include "branchnum/matrix.hpp"

namespace branchnum {

struct MatrixFile {
  FieldPtr field;
  FqMatrix matrix;
};

/// Throws Error{Parse} (message carries line and column), Error{EntryOutOfField},
/// and field construction errors (NotPrime, Reducible, DegreeMismatch).
MatrixFile parse_matrix_text(std::string_view text, std::string_view source = "<input>");
MatrixFile parse_matrix_file(const std::filesystem::path& path);

std::string format_matrix_file(const FqMatrix& m);

}  // namespace branchnum
