#pragma once

#include <algorithm>
#include <cstdint>
#include <istream>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "permstego/alphabet.hpp"
#include "permstego/error.hpp"
#include "permstego/factoradic.hpp"
#include "permstego/natural.hpp"
#include "permstego/radix.hpp"
#include "permstego/random.hpp"

namespace permstego {

/// Visible list whose ordering carries the message. Items are distinct by
/// byte-exact comparison.
class CoverList {
 public:
  CoverList() = default;
  explicit CoverList(std::vector<std::string> items) : items_(std::move(items)) {
    std::unordered_set<std::string_view> seen;
    for (const auto& item : items_) {
      if (!seen.insert(item).second) throw Error(ErrorCode::DuplicateItem, "cover item '" + item + "' repeats");
    }
  }
  CoverList(std::initializer_list<std::string> items) : CoverList(std::vector<std::string>(items)) {}

  std::size_t size() const noexcept { return items_.size(); }
  bool empty() const noexcept { return items_.empty(); }
  const std::vector<std::string>& items() const noexcept { return items_; }
  const std::string& operator[](std::size_t k) const { return items_[k]; }

  friend bool operator==(const CoverList&, const CoverList&) = default;

 private:
  std::vector<std::string> items_;
};

/// Secret starting order of r, given as a permutation of 0..n-1.
class BaselineOrdering {
 public:
  explicit BaselineOrdering(PermutationCode order) : order_(std::move(order)) {
    if (order_.empty()) throw Error(ErrorCode::NotAPermutation, "a baseline ordering needs at least one entry");
    validate_permutation(order_);
  }

  static BaselineOrdering identity(std::size_t n) { return BaselineOrdering(identity_code(n)); }

  std::size_t size() const noexcept { return order_.size(); }
  const PermutationCode& order() const noexcept { return order_; }

  friend bool operator==(const BaselineOrdering&, const BaselineOrdering&) = default;

 private:
  PermutationCode order_;
};

/// Byte-wise lexicographic sort.
inline CoverList canonical_baseline(const CoverList& cover) {
  std::vector<std::string> items = cover.items();
  std::sort(items.begin(), items.end());
  return CoverList(std::move(items));
}

/// output[k] = cover[code[k]]
inline CoverList apply_code(const CoverList& cover, std::span<const std::size_t> code) {
  if (cover.size() != code.size()) {
    throw Error(ErrorCode::LengthMismatch, "cover has " + std::to_string(cover.size()) + " items, code has " +
                                               std::to_string(code.size()));
  }
  validate_permutation(code);
  std::vector<std::string> out;
  out.reserve(code.size());
  for (const std::size_t index : code) out.push_back(cover[index]);
  return CoverList(std::move(out));
}

/// Position of each observed item in the canonical cover.
inline PermutationCode recover_code(const CoverList& observed, const CoverList& cover) {
  if (observed.size() != cover.size()) {
    throw Error(ErrorCode::LengthMismatch, "observed list has " + std::to_string(observed.size()) +
                                               " items, baseline has " + std::to_string(cover.size()));
  }
  std::unordered_map<std::string_view, std::size_t> position;
  position.reserve(cover.size());
  for (std::size_t k = 0; k < cover.size(); ++k) position.emplace(cover[k], k);
  PermutationCode code;
  code.reserve(observed.size());
  for (const auto& item : observed.items()) {
    const auto it = position.find(item);
    if (it == position.end()) throw Error(ErrorCode::ItemNotInBaseline, "'" + item + "' is not in the baseline list");
    code.push_back(it->second);
  }
  return code;
}

struct MessageOptions {
  bool sentinel = true;
};

struct DecodedMessage {
  std::u32string text;
  // Sentinel mode only: false means the decoded text did not end with the
  // sentinel and is returned unstripped.
  bool sentinel_found = false;
};

namespace detail {

inline PermutationCode initial_order(std::size_t n, const std::optional<BaselineOrdering>& key) {
  if (!key) return identity_code(n);
  if (key->size() != n) {
    throw Error(ErrorCode::KeyLengthMismatch, "key has " + std::to_string(key->size()) + " entries, cover has " +
                                                  std::to_string(n));
  }
  return key->order();
}

}  // namespace detail

/// Reorders `cover` so that it carries `message`. The full cover length is
/// always used; surplus capacity shows up as leading zero digits.
inline CoverList encode_message(std::u32string_view message, const Alphabet& alphabet, const CoverList& cover,
                                const std::optional<BaselineOrdering>& key = std::nullopt,
                                const MessageOptions& options = {}) {
  const Natural s = options.sentinel ? message_to_natural(append_sentinel(message, alphabet), alphabet)
                                     : message_to_natural(message, alphabet);
  const std::size_t needed = min_factorial_length(s);
  if (cover.size() < needed) {
    throw Error(ErrorCode::CoverTooSmall, "message needs a cover of at least " + std::to_string(needed) +
                                              " items, got " + std::to_string(cover.size()));
  }
  const PermutationCode initial = detail::initial_order(cover.size(), key);
  return apply_code(cover, encode_permutation(s, std::span<const std::size_t>(initial)));
}

inline DecodedMessage decode_message(const CoverList& observed, const Alphabet& alphabet, const CoverList& cover,
                                     const std::optional<BaselineOrdering>& key = std::nullopt,
                                     const MessageOptions& options = {}) {
  const PermutationCode code = recover_code(observed, cover);
  const PermutationCode initial = detail::initial_order(cover.size(), key);
  DecodedMessage out;
  out.text = natural_to_message(decode_permutation(code, initial), alphabet);
  if (options.sentinel && has_sentinel(out.text, alphabet)) {
    out.text.pop_back();
    out.sentinel_found = true;
  }
  return out;
}

/// Fisher-Yates shuffle of 0..n-1 driven by mt19937_64(seed).
inline BaselineOrdering generate_key(std::size_t n, std::uint64_t seed) {
  PermutationCode order = identity_code(n);
  std::mt19937_64 rng(seed);
  for (std::size_t k = n; k > 1; --k) {
    const auto j = static_cast<std::size_t>(uniform_below(rng, k));
    std::swap(order[k - 1], order[j]);
  }
  return BaselineOrdering(std::move(order));
}

/// One item per line; blank lines and lines starting with '#' are skipped.
/// A trailing '\r' is dropped.
inline CoverList read_cover_list(std::istream& in) {
  std::vector<std::string> items;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    items.push_back(line);
  }
  return CoverList(std::move(items));
}

}  // namespace permstego
