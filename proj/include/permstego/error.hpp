#pragma once

#include <stdexcept>
#include <string>

namespace permstego {

enum class ErrorCode {
  DuplicateSymbol,
  AlphabetTooSmall,
  SymbolNotInAlphabet,
  SentinelMissing,
  CapacityExceeded,
  NotAPermutation,
  DuplicateItem,
  LengthMismatch,
  ItemNotInBaseline,
  CoverTooSmall,
  KeyLengthMismatch,
  ParseError,
  IoError,
};

inline const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DuplicateSymbol: return "DuplicateSymbol";
    case ErrorCode::AlphabetTooSmall: return "AlphabetTooSmall";
    case ErrorCode::SymbolNotInAlphabet: return "SymbolNotInAlphabet";
    case ErrorCode::SentinelMissing: return "SentinelMissing";
    case ErrorCode::CapacityExceeded: return "CapacityExceeded";
    case ErrorCode::NotAPermutation: return "NotAPermutation";
    case ErrorCode::DuplicateItem: return "DuplicateItem";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::ItemNotInBaseline: return "ItemNotInBaseline";
    case ErrorCode::CoverTooSmall: return "CoverTooSmall";
    case ErrorCode::KeyLengthMismatch: return "KeyLengthMismatch";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace permstego
