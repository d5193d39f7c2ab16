#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace normlab {

using BigInt = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

/// Coefficients of a univariate polynomial, lowest degree first.
using IntPolynomial = std::vector<BigInt>;

/// Drops trailing zero coefficients; the zero polynomial becomes empty.
inline void trim(IntPolynomial& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline BigInt binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < k) return 0;
  BigInt r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// Binomial coefficient viewed as the polynomial x(x-1)...(x-k+1)/k!,
/// evaluated at any integer x (including negative ones).
inline BigInt binomial_polynomial(std::int64_t x, std::int64_t k) {
  if (k < 0) return 0;
  BigInt num = 1, den = 1;
  for (std::int64_t i = 0; i < k; ++i) {
    num *= (x - i);
    den *= (i + 1);
  }
  return num / den;
}

inline std::string to_string(const BigInt& v) { return v.str(); }
inline std::string to_string(const Rational& v) { return v.str(); }

}  // namespace normlab
