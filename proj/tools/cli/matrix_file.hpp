#pragma once

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include "schurbound/matrix.hpp"

namespace schurbound::cli {

/// Malformed matrix or scenario file. Carries the 1-based location of the
/// offending token (column 0 when the whole line or file is at fault).
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string source, int line, int column, const std::string& what);

  const std::string& source() const noexcept { return source_; }
  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  std::string source_;
  int line_;
  int column_;
};

/// Parses the text matrix format:
///
///   n <rows> <cols> <real|complex>
///   <rows lines of <cols> whitespace-separated entries>
///
/// Complex entries are written "re,im" with no spaces. Blank lines and lines
/// starting with '#' or '%' are ignored.
Matrix parse_matrix_text(std::string_view text, const std::string& source = "<string>");
Matrix parse_matrix(const std::filesystem::path& path);

/// Writes `m` in the same format with 17 significant digits. The matrix is
/// written as "real" when every imaginary part is exactly zero.
void write_matrix(std::ostream& out, const Matrix& m);
void write_matrix(const std::filesystem::path& path, const Matrix& m);

}  // namespace schurbound::cli
