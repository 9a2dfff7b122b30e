#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace turancount {

using big_int = boost::multiprecision::cpp_int;
using rational = boost::multiprecision::cpp_rational;

// (m)_k = m (m-1) ... (m-k+1); zero when 0 <= m < k.
inline big_int falling_factorial(std::int64_t m, int k)
{
  big_int out = 1;
  for (int i = 0; i < k; ++i)
    out *= big_int(m - i);
  return out;
}

inline big_int binomial(std::int64_t m, int k)
{
  if (k < 0 || m < k)
    return 0;
  big_int num = falling_factorial(m, k);
  return num / falling_factorial(k, k);
}

inline std::string to_string(const big_int& x) { return x.str(); }

inline std::string to_string(const rational& x)
{
  if (denominator(x) == 1)
    return numerator(x).str();
  return numerator(x).str() + "/" + denominator(x).str();
}

// Parses "a" or "a/b" with optional sign; throws std::invalid_argument.
rational parse_rational(const std::string& text);

} // namespace turancount
