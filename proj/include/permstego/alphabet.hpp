#pragma once

#include <algorithm>
#include <cstddef>
#include <istream>
#include <map>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "permstego/error.hpp"
#include "permstego/utf8.hpp"

namespace permstego {

/// Ordered set of distinct symbols; a symbol's position is its digit value.
///
/// Symbols are opaque code points. No case folding or normalization happens
/// here. Immutable once built.
class Alphabet {
 public:
  explicit Alphabet(std::u32string symbols) : symbols_(std::move(symbols)) {
    for (std::size_t k = 0; k < symbols_.size(); ++k) {
      const auto [it, inserted] = index_.emplace(symbols_[k], k);
      if (!inserted) {
        throw Error(ErrorCode::DuplicateSymbol,
                    "symbol '" + utf8::encode(std::u32string(1, symbols_[k])) + "' appears at positions " +
                        std::to_string(it->second) + " and " + std::to_string(k));
      }
    }
    if (symbols_.size() < 2) {
      throw Error(ErrorCode::AlphabetTooSmall,
                  "an alphabet needs at least 2 symbols, got " + std::to_string(symbols_.size()));
    }
  }

  std::size_t size() const noexcept { return symbols_.size(); }
  const std::u32string& symbols() const noexcept { return symbols_; }
  char32_t symbol(std::size_t k) const { return symbols_.at(k); }

  bool contains(char32_t c) const { return index_.count(c) != 0; }

  std::size_t index_of(char32_t c) const {
    const auto it = index_.find(c);
    if (it == index_.end()) {
      throw Error(ErrorCode::SymbolNotInAlphabet,
                  "symbol '" + utf8::encode(std::u32string(1, c)) + "' (U+" + hex(c) + ") is not in the alphabet");
    }
    return it->second;
  }

  friend bool operator==(const Alphabet& a, const Alphabet& b) { return a.symbols_ == b.symbols_; }

 private:
  static std::string hex(char32_t c) {
    static constexpr char digits[] = "0123456789ABCDEF";
    std::string out;
    for (int shift = 12; shift >= 0; shift -= 4) out.push_back(digits[(c >> shift) & 0xF]);
    return out;
  }

  std::u32string symbols_;
  std::unordered_map<char32_t, std::size_t> index_;
};

inline Alphabet make_alphabet(std::u32string symbols) { return Alphabet(std::move(symbols)); }

inline Alphabet make_alphabet(std::string_view utf8_symbols) { return Alphabet(utf8::decode(utf8_symbols)); }

inline std::size_t index_of(char32_t c, const Alphabet& a) { return a.index_of(c); }

/// Lowercase Latin letters followed by a space (b = 27).
inline const Alphabet& default_alphabet() {
  static const Alphabet alphabet(U"abcdefghijklmnopqrstuvwxyz ");
  return alphabet;
}

/// Character weights used to build a frequency-ordered alphabet.
class FrequencyTable {
 public:
  FrequencyTable() = default;
  explicit FrequencyTable(std::map<char32_t, double> entries) : entries_(std::move(entries)) {
    for (const auto& [c, w] : entries_) check_weight(c, w);
  }

  void set(char32_t c, double weight) {
    check_weight(c, weight);
    entries_[c] = weight;
  }

  const std::map<char32_t, double>& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }

 private:
  static void check_weight(char32_t c, double w) {
    if (!(w >= 0.0)) {
      throw Error(ErrorCode::ParseError,
                  "weight for '" + utf8::encode(std::u32string(1, c)) + "' must be a nonnegative number");
    }
  }

  std::map<char32_t, double> entries_;
};

/// Sorts symbols by descending weight, ties by ascending code point.
inline Alphabet frequency_ordered_alphabet(const FrequencyTable& table) {
  if (table.size() < 2) {
    throw Error(ErrorCode::AlphabetTooSmall,
                "a frequency table needs at least 2 entries, got " + std::to_string(table.size()));
  }
  std::vector<std::pair<char32_t, double>> entries(table.entries().begin(), table.entries().end());
  std::stable_sort(entries.begin(), entries.end(), [](const auto& lhs, const auto& rhs) {
    if (lhs.second != rhs.second) return lhs.second > rhs.second;
    return lhs.first < rhs.first;
  });
  std::u32string symbols;
  symbols.reserve(entries.size());
  for (const auto& entry : entries) symbols.push_back(entry.first);
  return Alphabet(std::move(symbols));
}

/// Reads `<char><TAB><weight>` lines. Blank lines and lines starting with '#'
/// (other than a '#' entry followed by a tab) are skipped.
inline FrequencyTable parse_frequency_table(std::istream& in) {
  FrequencyTable table;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto tab = line.find('\t');
    if (line.front() == '#' && tab != 1) continue;
    if (tab == std::string::npos || tab == 0) {
      throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": expected <char><TAB><weight>");
    }
    const std::u32string key = utf8::decode(std::string_view(line).substr(0, tab));
    if (key.size() != 1) {
      throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": key must be a single character");
    }
    if (table.entries().count(key.front()) != 0) {
      throw Error(ErrorCode::DuplicateSymbol, "line " + std::to_string(line_no) + ": repeated character");
    }
    const std::string weight_text = line.substr(tab + 1);
    double weight = 0.0;
    std::size_t consumed = 0;
    try {
      weight = std::stod(weight_text, &consumed);
    } catch (const std::exception&) {
      consumed = 0;
    }
    if (consumed == 0 || weight_text.find_first_not_of(" \t", consumed) != std::string::npos) {
      throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": bad weight '" + weight_text + "'");
    }
    table.set(key.front(), weight);
  }
  return table;
}

}  // namespace permstego
