#pragma once

#include <string>
#include <string_view>

#include "specnorm/matrix.hpp"

namespace specnorm {

/// Matrix text format: a header line `m n`, then m lines of n entries. A real
/// entry is a decimal literal, a complex entry is `(re,im)`. `#` starts a
/// comment; LF and CRLF line ends are accepted.
ComplexMatrix parse_matrix(std::string_view text);

/// Inverse of parse_matrix with round-trip precision (%.17g). Real matrices
/// are written without parentheses.
std::string format_matrix(const ComplexMatrix& a);

/// Whole file as a string; ParseError if it cannot be read.
std::string read_text_file(const std::string& path);

}  // namespace specnorm
