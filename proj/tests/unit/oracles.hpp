#pragma once

// Independent reference implementations used as test oracles. They share no
// code with the library beyond the Rational type.

#include <cmath>
#include <cstdint>
#include <numbers>
#include <numeric>

#include "instanton/rational.hpp"

namespace oracle {

using instanton::BigInt;
using instanton::Rational;

inline Rational q(std::int64_t n, std::int64_t d) { return Rational(BigInt(n), BigInt(d)); }

// ((p/c)) by integer remainder.
inline Rational saw(std::int64_t p, std::int64_t c) {
  std::int64_t r = ((p % c) + c) % c;
  if (r == 0) return Rational(0);
  return q(2 * r - c, 2 * c);
}

// D(a, b; c) straight from the definition.
inline Rational dedekind(std::int64_t a, std::int64_t b, std::int64_t c) {
  Rational sum;
  for (std::int64_t i = 1; i < c; ++i) sum += saw(a * i, c) * saw(b * i, c);
  return sum;
}

inline double cot(double x) { return std::cos(x) / std::sin(x); }

// (1/4c) sum cot(pi a k / c) cot(pi b k / c).
inline double dedekind_cot(std::int64_t a, std::int64_t b, std::int64_t c) {
  double s = 0;
  for (std::int64_t k = 1; k < c; ++k) {
    s += cot(std::numbers::pi * static_cast<double>(a * k) / static_cast<double>(c)) *
         cot(std::numbers::pi * static_cast<double>(b * k) / static_cast<double>(c));
  }
  return s / (4.0 * static_cast<double>(c));
}

inline bool pairwise_coprime(std::int64_t a, std::int64_t b, std::int64_t c) {
  return std::gcd(a, b) == 1 && std::gcd(b, c) == 1 && std::gcd(a, c) == 1;
}

}  // namespace oracle
