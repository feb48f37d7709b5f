#pragma once

#include <cctype>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "apcrucial/errors.hpp"
#include "apcrucial/permutation.hpp"

namespace apcrucial {

// Compact one-line notation: values 1..9 are written as single digits,
// values >= 10 in parentheses, e.g. "4(13)1(10)6(11)725(12)893(17)(16)(15)(14)".
// Whitespace between tokens is ignored when parsing.
inline Permutation parse_notation(std::string_view text) {
  using K = ParseError::Kind;
  std::vector<int> values;
  std::vector<std::size_t> offsets;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c == '0') throw ParseError(K::zero_value, i, "value 0 is not allowed");
    if (c >= '1' && c <= '9') {
      values.push_back(c - '0');
      offsets.push_back(i);
      ++i;
      continue;
    }
    if (c != '(') throw ParseError(K::malformed_token, i, std::string("unexpected character '") + c + "'");
    const std::size_t open = i++;
    long long v = 0;
    std::size_t digits = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      v = v * 10 + (text[i] - '0');
      if (v > 1'000'000'000) throw ParseError(K::malformed_token, open, "value too large");
      ++i;
      ++digits;
    }
    if (i >= text.size() || text[i] != ')')
      throw ParseError(K::malformed_token, open, "unterminated parenthesized value");
    if (digits == 0) throw ParseError(K::malformed_token, open, "empty parentheses");
    if (v == 0) throw ParseError(K::zero_value, open, "value 0 is not allowed");
    if (v < 10) throw ParseError(K::malformed_token, open, "values below 10 must be written bare");
    ++i;
    values.push_back(static_cast<int>(v));
    offsets.push_back(open);
  }
  if (values.empty()) throw ParseError(K::malformed_token, 0, "empty permutation");

  const std::size_t n = values.size();
  std::vector<std::size_t> first_seen(n + 1, std::string_view::npos);
  for (std::size_t j = 0; j < n; ++j) {
    const auto v = static_cast<std::size_t>(values[j]);
    if (v > n) {
      throw ParseError(K::non_contiguous, offsets[j],
                       "value " + std::to_string(v) + " exceeds length " + std::to_string(n));
    }
    if (first_seen[v] != std::string_view::npos)
      throw ParseError(K::duplicate_value, offsets[j], "duplicate value " + std::to_string(v));
    first_seen[v] = j;
  }
  return make_unchecked(std::move(values));
}

inline std::string format_notation(const Permutation& p) {
  std::string out;
  for (int v : p) {
    if (v <= 9) {
      out.push_back(static_cast<char>('0' + v));
    } else {
      out += '(';
      out += std::to_string(v);
      out += ')';
    }
  }
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const Permutation& p) { return os << format_notation(p); }

}  // namespace apcrucial
