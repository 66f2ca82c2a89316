#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include "l11prox/matrix.hpp"

namespace l11prox::csv {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Shortest decimal string that parses back to exactly `v`. Zero prints as "0".
std::string format_number(double v);

/// `v` rounded to `digits` significant digits (printf %g style). Zero prints as "0".
std::string format_number(double v, int digits);

/// One row per line, comma-separated, no header. Blank lines and lines
/// starting with '#' are skipped. Throws ParseError on ragged rows, malformed
/// or non-finite numbers, or an empty document.
Matrix parse_matrix(std::string_view text);

Matrix read_matrix(const std::string& path);

/// Writes rows as LF-terminated lines. `digits` == 0 selects the shortest
/// round-trip representation.
void write_matrix(std::ostream& out, const Matrix& x, int digits = 0);

std::string to_string(const Matrix& x, int digits = 0);

}  // namespace l11prox::csv
