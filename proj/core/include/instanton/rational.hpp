#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace instanton {

using BigInt = boost::multiprecision::cpp_int;

BigInt gcd(const BigInt& a, const BigInt& b);
// Floor division and non-negative remainder for a positive modulus.
BigInt floor_div(const BigInt& a, const BigInt& b);
BigInt mod_positive(const BigInt& a, const BigInt& m);
// Inverse of a modulo m (m > 0, gcd(a, m) = 1); result in [0, m).
BigInt mod_inverse(const BigInt& a, const BigInt& m);
int sign(const BigInt& a);

/// Exact fraction numerator/denominator, always stored in lowest terms with a
/// positive denominator. Every arithmetic result is normalized.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(int n) : num_(n), den_(1) {}  // NOLINT(google-explicit-constructor)
  Rational(long n) : num_(n), den_(1) {}  // NOLINT
  Rational(long long n) : num_(n), den_(1) {}  // NOLINT
  Rational(const BigInt& n) : num_(n), den_(1) {}  // NOLINT
  Rational(BigInt num, BigInt den);

  /// Parses "p/q", "p" or "-p/q" (whitespace around tokens tolerated).
  static Rational parse(std::string_view text);

  const BigInt& numerator() const { return num_; }
  const BigInt& denominator() const { return den_; }

  bool is_integer() const { return den_ == 1; }
  bool is_zero() const { return num_ == 0; }
  int sign() const { return instanton::sign(num_); }

  BigInt floor() const;
  Rational frac() const;  // x - floor(x), in [0, 1)
  Rational abs() const;
  Rational reciprocal() const;

  double to_double() const;
  long double to_long_double() const;
  std::string to_string() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  std::size_t hash() const;

 private:
  void normalize();

  BigInt num_;
  BigInt den_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace instanton

template <>
struct std::hash<instanton::Rational> {
  std::size_t operator()(const instanton::Rational& r) const { return r.hash(); }
};
