#pragma once

// Matrix text format: line 1 holds the order n, then n lines of n
// space-separated entries from {-1,0,1}. LF line endings, no trailing blanks.

#include <charconv>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "hwm/error.hpp"
#include "hwm/matrix.hpp"

namespace hwm {

inline std::string format_matrix(const TernaryMatrix& m) {
  std::string out = std::to_string(m.order());
  out += '\n';
  for (std::size_t i = 0; i < m.order(); ++i) {
    for (std::size_t j = 0; j < m.order(); ++j) {
      if (j) out += ' ';
      out += std::to_string(m(i, j));
    }
    out += '\n';
  }
  return out;
}

namespace detail {

inline std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    const std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) {
      lines.push_back(text.substr(start));
      break;
    }
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  return lines;
}

inline long long parse_int(std::string_view token, std::size_t line_no) {
  long long value = 0;
  const auto* first = token.data();
  const auto* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || token.empty())
    throw Error(ErrorKind::ParseError,
                "line " + std::to_string(line_no) + ": '" + std::string(token) + "' is not an integer");
  return value;
}

}  // namespace detail

inline TernaryMatrix parse_matrix(std::string_view text) {
  auto lines = detail::split_lines(text);
  for (auto& line : lines)
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  if (lines.empty()) throw Error(ErrorKind::ParseError, "empty input");

  const long long n = detail::parse_int(lines[0], 1);
  if (n <= 0) throw Error(ErrorKind::ParseError, "order must be positive");
  if (lines.size() != static_cast<std::size_t>(n) + 1)
    throw Error(ErrorKind::ParseError, "expected " + std::to_string(n) + " rows, found " +
                                           std::to_string(lines.size() - 1));

  TernaryMatrix m(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < static_cast<std::size_t>(n); ++i) {
    std::string_view line = lines[i + 1];
    std::size_t col = 0, pos = 0;
    while (pos < line.size()) {
      while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
      if (pos >= line.size()) break;
      std::size_t end = pos;
      while (end < line.size() && line[end] != ' ' && line[end] != '\t') ++end;
      const long long v = detail::parse_int(line.substr(pos, end - pos), i + 2);
      if (v < -1 || v > 1)
        throw Error(ErrorKind::ParseError,
                    "line " + std::to_string(i + 2) + ": entry " + std::to_string(v) + " not in {-1,0,1}");
      if (col >= static_cast<std::size_t>(n))
        throw Error(ErrorKind::ParseError, "line " + std::to_string(i + 2) + ": too many entries");
      m.set(i, col++, static_cast<int>(v));
      pos = end;
    }
    if (col != static_cast<std::size_t>(n))
      throw Error(ErrorKind::ParseError, "line " + std::to_string(i + 2) + ": expected " +
                                             std::to_string(n) + " entries, found " + std::to_string(col));
  }
  return m;
}

inline TernaryMatrix read_matrix_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_matrix(buf.str());
}

inline void write_matrix_file(const std::string& path, const TernaryMatrix& m) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::InvalidArgument, "cannot write " + path);
  out << format_matrix(m);
}

}  // namespace hwm
