#include "specnorm/io.hpp"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "specnorm/errors.hpp"
#include "text_util.hpp"

namespace specnorm {

namespace {

double parse_real(std::string_view token, const std::string& where) {
  const std::string s(token);
  char* end = nullptr;
  errno = 0;
  const double v = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size() || errno == ERANGE || !std::isfinite(v)) {
    fail(ErrorKind::ParseError, where + ": bad number `" + s + "`");
  }
  return v;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

Complex parse_entry(std::string_view token, const std::string& where) {
  if (token.front() != '(') return {parse_real(token, where), 0.0};
  if (token.size() < 2 || token.back() != ')') fail(ErrorKind::ParseError, where + ": unterminated complex entry");
  const std::string_view inner = token.substr(1, token.size() - 2);
  const std::size_t comma = inner.find(',');
  if (comma == std::string_view::npos) fail(ErrorKind::ParseError, where + ": complex entry needs `(re,im)`");
  return {parse_real(trim(inner.substr(0, comma)), where), parse_real(trim(inner.substr(comma + 1)), where)};
}

void append_real(std::string& out, double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v == 0.0 ? 0.0 : v);
  out += buf;
}

}  // namespace

ComplexMatrix parse_matrix(std::string_view text) {
  const auto lines = text::tokenize(text);
  if (lines.empty()) fail(ErrorKind::ParseError, "matrix text is empty");
  const auto& header = lines.front();
  if (header.tokens.size() != 2) fail(ErrorKind::ParseError, "line 1: expected `m n`");
  const auto m = text::parse_count(header.tokens[0]);
  const auto n = text::parse_count(header.tokens[1]);
  if (!m || !n || *m == 0 || *n == 0) fail(ErrorKind::ParseError, "line 1: dimensions must be positive integers");
  if (lines.size() != *m + 1) {
    fail(ErrorKind::ParseError, "expected " + std::to_string(*m) + " rows, found " +
                                    std::to_string(lines.size() - 1));
  }
  std::vector<Complex> entries;
  entries.reserve(*m * *n);
  for (std::size_t i = 1; i <= *m; ++i) {
    const auto& line = lines[i];
    const std::string where = "line " + std::to_string(line.number);
    if (line.tokens.size() != *n) {
      fail(ErrorKind::ParseError, where + ": expected " + std::to_string(*n) + " entries");
    }
    for (std::string_view tok : line.tokens) entries.push_back(parse_entry(tok, where));
  }
  return ComplexMatrix(*m, *n, std::move(entries));
}

std::string format_matrix(const ComplexMatrix& a) {
  const bool real = a.is_real();
  std::string out = std::to_string(a.rows()) + " " + std::to_string(a.cols()) + "\n";
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (j) out += ' ';
      const Complex c = a(i, j);
      if (real) {
        append_real(out, c.real());
      } else {
        out += '(';
        append_real(out, c.real());
        out += ',';
        append_real(out, c.imag());
        out += ')';
      }
    }
    out += '\n';
  }
  return out;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::ParseError, "cannot open `" + path + "`");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace specnorm
