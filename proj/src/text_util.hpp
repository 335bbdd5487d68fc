#pragma once

#include <charconv>
#include <optional>
#include <string_view>
#include <vector>

namespace specnorm::text {

struct Line {
  std::size_t number = 0;  // 1-based
  std::vector<std::string_view> tokens;
};

// Splits into lines (LF or CRLF), drops `#` comments and blank lines, and
// tokenizes on whitespace. Complex literals such as "(1, 2)" are kept whole.
inline std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  while (!text.empty()) {
    const std::size_t eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    ++number;
    if (const std::size_t hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    Line parsed{number, {}};
    std::size_t i = 0;
    auto space = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; };
    while (i < line.size()) {
      while (i < line.size() && space(line[i])) ++i;
      if (i >= line.size()) break;
      const std::size_t start = i;
      if (line[i] == '(') {
        while (i < line.size() && line[i] != ')') ++i;
        if (i < line.size()) ++i;
      } else {
        while (i < line.size() && !space(line[i])) ++i;
      }
      parsed.tokens.push_back(line.substr(start, i - start));
    }
    if (!parsed.tokens.empty()) out.push_back(std::move(parsed));
  }
  return out;
}

inline std::optional<std::size_t> parse_count(std::string_view token) {
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) return std::nullopt;
  return value;
}

}  // namespace specnorm::text
