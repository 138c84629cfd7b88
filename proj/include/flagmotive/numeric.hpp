#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace flagmotive {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// C(n, k) for n >= 0; zero when k is out of range.
inline Int binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  Int result = 1;
  for (std::int64_t j = 1; j <= k; ++j) {
    result *= (n - k + j);
    result /= j;
  }
  return result;
}

inline Int factorial(std::int64_t n) {
  Int result = 1;
  for (std::int64_t j = 2; j <= n; ++j) result *= j;
  return result;
}

inline std::string to_string(const Int& v) { return v.str(); }

}  // namespace flagmotive
