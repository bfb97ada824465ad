#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <string>

#include "instanton/rational.hpp"

namespace instanton {

/// r + s*sqrt(D) with exact rational parts. D must be squarefree and > 1.
template <int D>
class Quadratic {
  static_assert(D > 1, "Quadratic<D> needs an irrational square root");

 public:
  Quadratic() = default;
  Quadratic(int r) : r_(r) {}  // NOLINT(google-explicit-constructor)
  Quadratic(Rational r) : r_(std::move(r)) {}  // NOLINT
  Quadratic(Rational r, Rational s) : r_(std::move(r)), s_(std::move(s)) {}

  const Rational& rational_part() const { return r_; }
  const Rational& surd_part() const { return s_; }
  bool is_zero() const { return r_.is_zero() && s_.is_zero(); }

  Quadratic operator-() const { return {-r_, -s_}; }
  friend Quadratic operator+(const Quadratic& a, const Quadratic& b) { return {a.r_ + b.r_, a.s_ + b.s_}; }
  friend Quadratic operator-(const Quadratic& a, const Quadratic& b) { return {a.r_ - b.r_, a.s_ - b.s_}; }
  friend Quadratic operator*(const Quadratic& a, const Quadratic& b) {
    return {a.r_ * b.r_ + Rational(D) * a.s_ * b.s_, a.r_ * b.s_ + a.s_ * b.r_};
  }
  friend bool operator==(const Quadratic&, const Quadratic&) = default;

  double to_double() const;
  std::string to_string() const;
  std::size_t hash() const { return r_.hash() * 1000003u ^ s_.hash(); }

 private:
  Rational r_;
  Rational s_;
};

using Sqrt2 = Quadratic<2>;
using Sqrt5 = Quadratic<5>;

inline std::string scalar_string(const Rational& r) { return r.to_string(); }
inline std::size_t scalar_hash(const Rational& r) { return r.hash(); }
inline double scalar_double(const Rational& r) { return r.to_double(); }
template <int D>
std::string scalar_string(const Quadratic<D>& q) { return q.to_string(); }
template <int D>
std::size_t scalar_hash(const Quadratic<D>& q) { return q.hash(); }
template <int D>
double scalar_double(const Quadratic<D>& q) { return q.to_double(); }

/// Quaternion w + x i + y j + z k over an exact scalar ring.
template <class S>
class Quaternion {
 public:
  Quaternion() = default;
  Quaternion(S w, S x, S y, S z) : c_{std::move(w), std::move(x), std::move(y), std::move(z)} {}

  static Quaternion one() { return {S(1), S(0), S(0), S(0)}; }

  const S& operator[](std::size_t i) const { return c_[i]; }
  const std::array<S, 4>& coefficients() const { return c_; }

  S norm_squared() const { return c_[0] * c_[0] + c_[1] * c_[1] + c_[2] * c_[2] + c_[3] * c_[3]; }
  bool is_unit() const { return norm_squared() == S(1); }
  Quaternion conjugate() const { return {c_[0], -c_[1], -c_[2], -c_[3]}; }
  /// Inverse of a unit quaternion.
  Quaternion unit_inverse() const { return conjugate(); }
  Quaternion operator-() const { return {-c_[0], -c_[1], -c_[2], -c_[3]}; }

  friend Quaternion operator*(const Quaternion& p, const Quaternion& q) {
    const auto& a = p.c_;
    const auto& b = q.c_;
    return {a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3],
            a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2],
            a[0] * b[2] - a[1] * b[3] + a[2] * b[0] + a[3] * b[1],
            a[0] * b[3] + a[1] * b[2] - a[2] * b[1] + a[3] * b[0]};
  }
  friend bool operator==(const Quaternion&, const Quaternion&) = default;

  std::string to_string() const {
    return "(" + scalar_string(c_[0]) + "," + scalar_string(c_[1]) + "," + scalar_string(c_[2]) + "," +
           scalar_string(c_[3]) + ")";
  }
  std::size_t hash() const {
    std::size_t h = 0;
    for (const auto& x : c_) h = h * 1000003u ^ scalar_hash(x);
    return h;
  }

 private:
  std::array<S, 4> c_{};
};

using QuaternionUnit = Quaternion<Rational>;

inline QuaternionUnit quaternion_product(const QuaternionUnit& x, const QuaternionUnit& y) { return x * y; }

template <int D>
double Quadratic<D>::to_double() const {
  return r_.to_double() + s_.to_double() * std::sqrt(static_cast<double>(D));
}

template <int D>
std::string Quadratic<D>::to_string() const {
  if (s_.is_zero()) return r_.to_string();
  std::string out = r_.is_zero() ? "" : r_.to_string() + "+";
  return out + s_.to_string() + "*sqrt" + std::to_string(D);
}

}  // namespace instanton

template <class S>
struct std::hash<instanton::Quaternion<S>> {
  std::size_t operator()(const instanton::Quaternion<S>& q) const { return q.hash(); }
};
