#include "instanton/rational.hpp"

#include <cctype>
#include <functional>
#include <ostream>

#include "instanton/error.hpp"

namespace instanton {

BigInt gcd(const BigInt& a, const BigInt& b) {
  return boost::multiprecision::gcd(a, b);
}

BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  BigInt r = a % b;
  if (r != 0 && ((r < 0) != (b < 0))) --q;
  return q;
}

BigInt mod_positive(const BigInt& a, const BigInt& m) {
  BigInt r = a % m;
  if (r < 0) r += m;
  return r;
}

BigInt mod_inverse(const BigInt& a, const BigInt& m) {
  if (m <= 0) throw ValidationError("bad_modulus", "mod_inverse: modulus must be positive");
  if (m == 1) return 0;
  BigInt r0 = m, r1 = mod_positive(a, m);
  BigInt t0 = 0, t1 = 1;
  while (r1 != 0) {
    BigInt q = r0 / r1;
    BigInt r2 = r0 - q * r1;
    r0 = r1;
    r1 = r2;
    BigInt t2 = t0 - q * t1;
    t0 = t1;
    t1 = t2;
  }
  if (r0 != 1) throw ValidationError("not_coprime", "mod_inverse: argument not invertible");
  return mod_positive(t0, m);
}

int sign(const BigInt& a) { return a > 0 ? 1 : (a < 0 ? -1 : 0); }

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_ == 0) throw ValidationError("zero_denominator", "Rational: zero denominator");
  normalize();
}

void Rational::normalize() {
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_ == 0) {
    den_ = 1;
    return;
  }
  if (den_ == 1) return;
  BigInt g = gcd(num_, den_);
  if (g != 1) {
    num_ /= g;
    den_ /= g;
  }
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

BigInt parse_integer(std::string_view s, std::string_view whole) {
  s = trim(s);
  std::size_t i = 0;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) i = 1;
  if (i == s.size()) {
    throw ValidationError("bad_rational", "cannot parse rational '" + std::string(whole) + "'");
  }
  for (std::size_t j = i; j < s.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(s[j]))) {
      throw ValidationError("bad_rational", "cannot parse rational '" + std::string(whole) + "'");
    }
  }
  BigInt v(std::string(s.substr(i)));
  return s[0] == '-' ? BigInt(-v) : v;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text, text));
  BigInt den = parse_integer(text.substr(slash + 1), text);
  if (den == 0) throw ValidationError("zero_denominator", "Rational: zero denominator in '" + std::string(text) + "'");
  return Rational(parse_integer(text.substr(0, slash), text), std::move(den));
}

BigInt Rational::floor() const { return floor_div(num_, den_); }

Rational Rational::frac() const {
  Rational r;
  r.num_ = mod_positive(num_, den_);
  r.den_ = den_;
  r.normalize();
  return r;
}

Rational Rational::abs() const { return num_ < 0 ? -*this : *this; }

Rational Rational::reciprocal() const {
  if (num_ == 0) throw ValidationError("division_by_zero", "Rational: reciprocal of zero");
  return Rational(den_, num_);
}

double Rational::to_double() const { return static_cast<double>(to_long_double()); }

long double Rational::to_long_double() const {
  // Scale down huge operands first so the conversion never overflows.
  BigInt n = num_, d = den_;
  const unsigned nb = n == 0 ? 0 : boost::multiprecision::msb(boost::multiprecision::abs(n));
  const unsigned db = boost::multiprecision::msb(d);
  if (nb > 1000 || db > 1000) {
    const unsigned shift = std::max(nb, db) - 1000;
    n >>= shift;
    d >>= shift;
    if (d == 0) return n.convert_to<long double>() * 0.0L;  // unreachable for sane input
  }
  return n.convert_to<long double>() / d.convert_to<long double>();
}

std::string Rational::to_string() const {
  if (den_ == 1) return num_.str();
  return num_.str() + "/" + den_.str();
}

Rational Rational::operator-() const {
  Rational r = *this;
  r.num_ = -r.num_;
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
  }
  normalize();
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  if (den_ == o.den_) {
    num_ -= o.num_;
  } else {
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ *= o.den_;
  }
  normalize();
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  normalize();
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.num_ == 0) throw ValidationError("division_by_zero", "Rational: division by zero");
  BigInt n = num_ * o.den_;
  BigInt d = den_ * o.num_;
  num_ = std::move(n);
  den_ = std::move(d);
  normalize();
  return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  if (a.den_ == b.den_) return a.num_.compare(b.num_) <=> 0;
  const BigInt lhs = a.num_ * b.den_;
  const BigInt rhs = b.num_ * a.den_;
  return lhs.compare(rhs) <=> 0;
}

std::size_t Rational::hash() const {
  std::size_t h = boost::multiprecision::hash_value(num_);
  const std::size_t d = boost::multiprecision::hash_value(den_);
  h ^= d + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace instanton
