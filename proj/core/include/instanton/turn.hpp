#pragma once

#include <compare>
#include <string>

#include "instanton/rational.hpp"

namespace instanton {

/// An angle as an exact fraction of a full revolution, reduced into [0, 1).
/// The turn t stands for the unit complex number exp(2*pi*i*t).
class Turn {
 public:
  Turn() = default;
  explicit Turn(const Rational& r) : frac_(r.frac()) {}
  Turn(long long num, long long den) : Turn(Rational(BigInt(num), BigInt(den))) {}

  static Turn zero() { return Turn(); }
  static Turn half() { return Turn(1, 2); }

  const Rational& fraction() const { return frac_; }
  bool is_zero() const { return frac_.is_zero(); }

  Turn operator-() const { return Turn(-frac_); }
  Turn& operator+=(const Turn& o) {
    frac_ = (frac_ + o.frac_).frac();
    return *this;
  }
  friend Turn operator+(Turn a, const Turn& b) { return a += b; }
  friend Turn operator-(const Turn& a, const Turn& b) { return a + (-b); }
  Turn operator*(const BigInt& k) const { return Turn(frac_ * Rational(k)); }

  /// Denominator of the reduced fraction: the order of exp(2*pi*i*t).
  const BigInt& order() const { return frac_.denominator(); }

  std::string to_string() const { return frac_.to_string(); }

  friend bool operator==(const Turn&, const Turn&) = default;
  friend std::strong_ordering operator<=>(const Turn& a, const Turn& b) {
    return a.frac_ <=> b.frac_;
  }

 private:
  Rational frac_;
};

}  // namespace instanton

template <>
struct std::hash<instanton::Turn> {
  std::size_t operator()(const instanton::Turn& t) const { return t.fraction().hash(); }
};
