#pragma once

#include <cctype>
#include <charconv>
#include <cstddef>
#include <string>
#include <string_view>

#include "permstego/error.hpp"
#include "permstego/factoradic.hpp"

namespace permstego {

/// `[i0,i1,...]` with no spaces.
inline std::string format_code(std::span<const std::size_t> code) {
  std::string out = "[";
  for (std::size_t k = 0; k < code.size(); ++k) {
    if (k != 0) out.push_back(',');
    out += std::to_string(code[k]);
  }
  out.push_back(']');
  return out;
}

namespace detail {

inline std::string_view trim(std::string_view text) {
  const auto is_space = [](char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; };
  while (!text.empty() && is_space(text.front())) text.remove_prefix(1);
  while (!text.empty() && is_space(text.back())) text.remove_suffix(1);
  return text;
}

}  // namespace detail

/// Parses a bracketed, comma-separated list of nonnegative integers.
/// Whitespace around the brackets, entries, and commas is ignored. Only the
/// syntax is checked here; callers validate the permutation.
inline PermutationCode parse_code(std::string_view text) {
  text = detail::trim(text);
  if (text.size() < 2 || text.front() != '[' || text.back() != ']') {
    throw Error(ErrorCode::ParseError, "expected a bracketed list such as [1,0]");
  }
  text = detail::trim(text.substr(1, text.size() - 2));
  PermutationCode code;
  if (text.empty()) return code;
  while (true) {
    const auto comma = text.find(',');
    const std::string_view field = detail::trim(text.substr(0, comma));
    std::size_t value = 0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size()) {
      throw Error(ErrorCode::ParseError, "bad list entry '" + std::string(field) + "'");
    }
    code.push_back(value);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return code;
}

}  // namespace permstego
