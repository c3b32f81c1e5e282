#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace permstego {

/// Exact nonnegative integer. Negativity is never produced by the codec paths.
using Natural = boost::multiprecision::cpp_int;

/// [0!, 1!, ..., (n-1)!]
inline std::vector<Natural> factorial_table(std::size_t n) {
  std::vector<Natural> facs;
  if (n == 0) return facs;
  facs.reserve(n);
  facs.emplace_back(1);
  for (std::size_t k = 1; k < n; ++k) facs.push_back(facs.back() * k);
  return facs;
}

inline Natural factorial(std::size_t n) {
  Natural f = 1;
  for (std::size_t k = 2; k <= n; ++k) f *= k;
  return f;
}

inline std::string to_decimal(const Natural& value) { return value.str(); }

}  // namespace permstego
