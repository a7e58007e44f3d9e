#pragma once

// Line-oriented helpers shared by the three statement formats.

#include <string>
#include <string_view>
#include <vector>

#include "defeasor/errors.hpp"

namespace defeasor::detail {

inline std::string_view trim(std::string_view s) {
  const char* ws = " \t\r\n";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

inline std::string_view strip_comment(std::string_view line) {
  auto hash = line.find('#');
  return hash == std::string_view::npos ? line : line.substr(0, hash);
}

inline std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    auto pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

inline bool starts_with_word(std::string_view s, std::string_view word) {
  if (s.substr(0, word.size()) != word) return false;
  return s.size() == word.size() || s[word.size()] == ' ' || s[word.size()] == '\t';
}

/// Calls `fn(line_number, statement)` for every non-blank line with the
/// comment and the trailing '.' removed. Throws ParseError when the
/// terminating '.' is missing.
template <typename Fn>
void for_each_statement(std::string_view text, Fn&& fn) {
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    auto raw = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    ++line_no;
    auto stmt = trim(strip_comment(raw));
    if (!stmt.empty()) {
      if (stmt.back() != '.') throw ParseError(line_no, "statement must end with '.'");
      stmt.remove_suffix(1);
      fn(line_no, trim(stmt));
    }
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
}

}  // namespace defeasor::detail
