#pragma once

#include <string>
#include <utility>
#include <string_view>

#include "permstego/alphabet.hpp"
#include "permstego/error.hpp"
#include "permstego/natural.hpp"

namespace permstego {

/// Reads the message as a base-b number, first character least significant:
/// s = sum over i of b^i * index(x_i).
inline Natural message_to_natural(std::u32string_view message, const Alphabet& alphabet) {
  Natural s = 0;
  Natural weight = 1;
  const std::size_t base = alphabet.size();
  for (const char32_t c : message) {
    s += weight * alphabet.index_of(c);
    weight *= base;
  }
  return s;
}

/// Inverse of message_to_natural by repeated division. Zero gives the empty
/// message, and the result never ends with the zero-valued symbol.
inline std::u32string natural_to_message(Natural s, const Alphabet& alphabet) {
  std::u32string out;
  const Natural base = alphabet.size();
  while (s > 0) {
    Natural quotient;
    Natural digit;
    boost::multiprecision::divide_qr(s, base, quotient, digit);
    s = std::move(quotient);
    out.push_back(alphabet.symbol(digit.convert_to<std::size_t>()));
  }
  return out;
}

/// Symbol appended to terminate messages that may end in the zero-valued symbol.
inline char32_t sentinel_symbol(const Alphabet& alphabet) { return alphabet.symbol(1); }

inline std::u32string append_sentinel(std::u32string_view message, const Alphabet& alphabet) {
  std::u32string out(message);
  out.push_back(sentinel_symbol(alphabet));
  return out;
}

inline bool has_sentinel(std::u32string_view message, const Alphabet& alphabet) {
  return !message.empty() && message.back() == sentinel_symbol(alphabet);
}

inline std::u32string strip_sentinel(std::u32string_view message, const Alphabet& alphabet) {
  if (!has_sentinel(message, alphabet)) {
    throw Error(ErrorCode::SentinelMissing, "message does not end with the sentinel symbol");
  }
  return std::u32string(message.substr(0, message.size() - 1));
}

}  // namespace permstego
