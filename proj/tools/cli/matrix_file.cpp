#include "cli/matrix_file.hpp"

#include <cerrno>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

namespace schurbound::cli {

ParseError::ParseError(std::string source, int line, int column, const std::string& what)
    : std::runtime_error([&] {
        std::ostringstream msg;
        msg << source << ":" << line;
        if (column > 0) msg << ":" << column;
        msg << ": " << what;
        return msg.str();
      }()),
      source_(std::move(source)),
      line_(line),
      column_(column) {}

namespace {

struct Token {
  std::string_view text;
  int column;  // 1-based
};

std::vector<Token> split_whitespace(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
  }
  return out;
}

bool parse_double(std::string_view s, double& out) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc{} && ptr == s.data() + s.size();
}

bool parse_size(std::string_view s, std::size_t& out) {
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc{} && ptr == s.data() + s.size();
}

}  // namespace

Matrix parse_matrix_text(std::string_view text, const std::string& source) {
  std::vector<std::pair<int, std::string_view>> lines;
  {
    int number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      const std::size_t end = std::min(text.find('\n', pos), text.size());
      ++number;
      std::string_view line = text.substr(pos, end - pos);
      const auto first = line.find_first_not_of(" \t\r");
      if (first != std::string_view::npos && line[first] != '#' && line[first] != '%')
        lines.emplace_back(number, line);
      pos = end + 1;
    }
  }
  if (lines.empty()) throw ParseError(source, 1, 0, "empty matrix file, expected header 'n <rows> <cols> <real|complex>'");

  const auto [header_line, header_text] = lines.front();
  const auto header = split_whitespace(header_text);
  if (header.size() != 4 || header[0].text != "n")
    throw ParseError(source, header_line, 1, "malformed header, expected 'n <rows> <cols> <real|complex>'");
  std::size_t rows = 0;
  std::size_t cols = 0;
  if (!parse_size(header[1].text, rows))
    throw ParseError(source, header_line, header[1].column, "invalid row count '" + std::string(header[1].text) + "'");
  if (!parse_size(header[2].text, cols))
    throw ParseError(source, header_line, header[2].column, "invalid column count '" + std::string(header[2].text) + "'");
  bool is_complex = false;
  if (header[3].text == "complex") {
    is_complex = true;
  } else if (header[3].text != "real") {
    throw ParseError(source, header_line, header[3].column,
                     "unknown field '" + std::string(header[3].text) + "', expected real or complex");
  }

  if (lines.size() - 1 != rows) {
    std::ostringstream msg;
    msg << "header declares " << rows << " rows, found " << lines.size() - 1;
    const int at = lines.size() - 1 > rows ? lines[rows + 1].first : lines.back().first;
    throw ParseError(source, at, 0, msg.str());
  }

  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const auto [line_no, line_text] = lines[i + 1];
    const auto tokens = split_whitespace(line_text);
    if (tokens.size() != cols) {
      std::ostringstream msg;
      msg << "row " << i + 1 << " has " << tokens.size() << " entries, expected " << cols;
      throw ParseError(source, line_no, 0, msg.str());
    }
    for (std::size_t j = 0; j < cols; ++j) {
      const Token& tok = tokens[j];
      const auto comma = tok.text.find(',');
      double re = 0.0;
      double im = 0.0;
      bool ok = false;
      if (comma == std::string_view::npos) {
        ok = parse_double(tok.text, re);
      } else if (is_complex) {
        ok = parse_double(tok.text.substr(0, comma), re) &&
             parse_double(tok.text.substr(comma + 1), im);
      } else {
        throw ParseError(source, line_no, tok.column,
                         "complex entry '" + std::string(tok.text) + "' in a real matrix");
      }
      if (!ok)
        throw ParseError(source, line_no, tok.column, "unparsable number '" + std::string(tok.text) + "'");
      m(i, j) = Complex(re, im);
    }
  }
  return m;
}

Matrix parse_matrix(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path.string(), 0, 0, "cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_matrix_text(buf.str(), path.string());
}

void write_matrix(std::ostream& out, const Matrix& m) {
  bool is_complex = false;
  for (const auto& v : m.data()) is_complex = is_complex || v.imag() != 0.0;
  out << "n " << m.rows() << " " << m.cols() << " " << (is_complex ? "complex" : "real") << "\n";
  char buf[64];
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j > 0) out << ' ';
      const Complex v = m(i, j);
      if (is_complex)
        std::snprintf(buf, sizeof buf, "%.17g,%.17g", v.real(), v.imag());
      else
        std::snprintf(buf, sizeof buf, "%.17g", v.real());
      out << buf;
    }
    out << "\n";
  }
}

void write_matrix(const std::filesystem::path& path, const Matrix& m) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  write_matrix(out, m);
}

}  // namespace schurbound::cli
