#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "permstego/error.hpp"
#include "permstego/natural.hpp"

namespace permstego {

/// A permutation of 0..n-1; entry k is the baseline index placed at position k.
using PermutationCode = std::vector<std::size_t>;

/// One iteration of the encoding loop, counted down from i = n to 1.
struct EncodeStep {
  std::size_t i;                   // items remaining before the pick
  const Natural& residual;         // s_i
  std::size_t digit;               // d_i = floor(s_i / (i-1)!)
  const Natural& next_residual;    // s_{i-1} = s_i - d_i (i-1)!
  const Natural& place_value;      // (i-1)!
  std::size_t chosen;              // r[d_i]
};

struct NoopObserver {
  void operator()(const EncodeStep&) const noexcept {}
};

/// Smallest n >= 1 with n! > s.
inline std::size_t min_factorial_length(const Natural& s) {
  std::size_t n = 1;
  Natural f = 1;
  while (f <= s) {
    ++n;
    f *= n;
  }
  return n;
}

/// Throws NotAPermutation unless `code` holds each of 0..n-1 exactly once.
inline void validate_permutation(std::span<const std::size_t> code) {
  std::vector<bool> seen(code.size(), false);
  for (std::size_t k = 0; k < code.size(); ++k) {
    const std::size_t v = code[k];
    if (v >= code.size()) {
      throw Error(ErrorCode::NotAPermutation, "entry " + std::to_string(v) + " at position " + std::to_string(k) +
                                                  " is outside 0.." + std::to_string(code.size() - 1));
    }
    if (seen[v]) {
      throw Error(ErrorCode::NotAPermutation, "entry " + std::to_string(v) + " repeats at position " +
                                                  std::to_string(k));
    }
    seen[v] = true;
  }
}

inline bool is_permutation_code(std::span<const std::size_t> code) {
  try {
    validate_permutation(code);
    return true;
  } catch (const Error&) {
    return false;
  }
}

inline PermutationCode identity_code(std::size_t n) {
  PermutationCode code(n);
  std::iota(code.begin(), code.end(), std::size_t{0});
  return code;
}

/// Maps s to a permutation of `initial` (the starting order of r).
///
/// Each step picks d_i = floor(s_i / (i-1)!) out of the remaining items and
/// carries s_i - d_i (i-1)! forward. When n is larger than
/// min_factorial_length(s), the leading digits are zero and the output starts
/// with the first items of `initial`. The loop invariants (0 <= s_i,
/// d_i <= i-1, s_0 = 0) are checked on every call; `observer` sees each step.
template <typename Observer = NoopObserver>
PermutationCode encode_permutation(const Natural& s, std::span<const std::size_t> initial,
                                   Observer&& observer = Observer{}) {
  const std::size_t n = initial.size();
  if (n == 0) throw Error(ErrorCode::CapacityExceeded, "permutation length must be positive");
  validate_permutation(initial);
  if (s < 0) throw Error(ErrorCode::CapacityExceeded, "value must be nonnegative");

  const std::vector<Natural> facs = factorial_table(n);
  if (facs.back() * n <= s) {
    throw Error(ErrorCode::CapacityExceeded,
                std::to_string(n) + "! does not exceed " + to_decimal(s) + "; need n >= " +
                    std::to_string(min_factorial_length(s)));
  }

  std::vector<std::size_t> remaining(initial.begin(), initial.end());
  PermutationCode out;
  out.reserve(n);
  Natural residual = s;
  Natural quotient;
  Natural next;
  for (std::size_t i = n; i >= 1; --i) {
    const Natural& place = facs[i - 1];
    boost::multiprecision::divide_qr(residual, place, quotient, next);
    if (quotient >= i) throw std::logic_error("encode: digit exceeds remaining item count");
    if (next < 0) throw std::logic_error("encode: negative residual");
    const auto digit = quotient.convert_to<std::size_t>();
    const std::size_t chosen = remaining[digit];
    observer(EncodeStep{i, residual, digit, next, place, chosen});
    out.push_back(chosen);
    remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(digit));
    residual.swap(next);
  }
  if (residual != 0) throw std::logic_error("encode: residual s_0 is not zero");
  return out;
}

template <typename Observer = NoopObserver>
PermutationCode encode_permutation(const Natural& s, std::size_t n, Observer&& observer = Observer{}) {
  const PermutationCode initial = identity_code(n);
  return encode_permutation(s, std::span<const std::size_t>(initial), std::forward<Observer>(observer));
}

/// Inverse of encode_permutation for the same starting order: each entry of
/// `code` contributes (its index among the items still in r) * (|r|-1)!.
inline Natural decode_permutation(std::span<const std::size_t> code, std::span<const std::size_t> initial) {
  if (code.empty()) throw Error(ErrorCode::NotAPermutation, "empty code");
  validate_permutation(code);
  validate_permutation(initial);
  if (code.size() != initial.size()) {
    throw Error(ErrorCode::LengthMismatch, "code has " + std::to_string(code.size()) + " entries, baseline has " +
                                               std::to_string(initial.size()));
  }
  const std::size_t n = code.size();
  const std::vector<Natural> facs = factorial_table(n);
  std::vector<std::size_t> remaining(initial.begin(), initial.end());
  Natural s = 0;
  for (std::size_t k = 0; k < n; ++k) {
    const auto it = std::find(remaining.begin(), remaining.end(), code[k]);
    const auto j = static_cast<std::size_t>(it - remaining.begin());
    s += facs[n - k - 1] * j;
    remaining.erase(it);
  }
  return s;
}

inline Natural decode_permutation(std::span<const std::size_t> code) {
  const PermutationCode initial = identity_code(code.size());
  return decode_permutation(code, initial);
}

}  // namespace permstego
