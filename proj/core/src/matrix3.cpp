#include "instanton/matrix3.hpp"

#include "instanton/error.hpp"

namespace instanton {

Vec3 operator+(const Vec3& a, const Vec3& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }
Vec3 operator-(const Vec3& a, const Vec3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
Vec3 operator*(const Rational& s, const Vec3& v) { return {s * v[0], s * v[1], s * v[2]}; }
Rational dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

bool is_zero(const Vec3& v) { return v[0].is_zero() && v[1].is_zero() && v[2].is_zero(); }

Vec3 primitive_direction(const Vec3& v) {
  if (is_zero(v)) throw ValidationError("zero_vector", "primitive_direction: zero vector");
  BigInt l = 1;
  for (const auto& x : v) l = l / gcd(l, x.denominator()) * x.denominator();
  BigInt g = 0;
  std::array<BigInt, 3> ints;
  for (int i = 0; i < 3; ++i) {
    ints[i] = v[i].numerator() * (l / v[i].denominator());
    g = gcd(g, ints[i]);
  }
  return {Rational(ints[0] / g), Rational(ints[1] / g), Rational(ints[2] / g)};
}

Vec3 canonical_axis(const Vec3& v) {
  Vec3 p = primitive_direction(v);
  for (const auto& x : p) {
    if (x.is_zero()) continue;
    if (x.sign() < 0) p = Rational(-1) * p;
    break;
  }
  return p;
}

std::string to_string(const Vec3& v) {
  return "(" + v[0].to_string() + "," + v[1].to_string() + "," + v[2].to_string() + ")";
}

RationalMatrix3 RationalMatrix3::identity() {
  RationalMatrix3 m;
  for (int i = 0; i < 3; ++i) m.m_[i][i] = 1;
  return m;
}

RationalMatrix3 RationalMatrix3::from_columns(const Vec3& c0, const Vec3& c1, const Vec3& c2) {
  RationalMatrix3 m;
  for (int r = 0; r < 3; ++r) {
    m.m_[r][0] = c0[r];
    m.m_[r][1] = c1[r];
    m.m_[r][2] = c2[r];
  }
  return m;
}

RationalMatrix3 RationalMatrix3::half_turn(const Vec3& axis) {
  const Rational n2 = dot(axis, axis);
  if (n2.is_zero()) throw ValidationError("zero_vector", "half_turn: zero axis");
  RationalMatrix3 m;
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) {
      m.m_[r][c] = Rational(2) * axis[r] * axis[c] / n2 - Rational(r == c ? 1 : 0);
    }
  }
  return m;
}

RationalMatrix3 RationalMatrix3::transpose() const {
  RationalMatrix3 t;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) t.m_[r][c] = m_[c][r];
  return t;
}

Rational RationalMatrix3::determinant() const {
  const auto& a = m_;
  return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
         a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
}

Rational RationalMatrix3::trace() const { return m_[0][0] + m_[1][1] + m_[2][2]; }

std::optional<RationalMatrix3> RationalMatrix3::inverse() const {
  const Rational det = determinant();
  if (det.is_zero()) return std::nullopt;
  const auto& a = m_;
  RationalMatrix3 inv;
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) {
      // cofactor of (c, r)
      const int r1 = (c + 1) % 3, r2 = (c + 2) % 3, c1 = (r + 1) % 3, c2 = (r + 2) % 3;
      inv.m_[r][c] = (a[r1][c1] * a[r2][c2] - a[r1][c2] * a[r2][c1]) / det;
    }
  }
  return inv;
}

RationalMatrix3 RationalMatrix3::power(unsigned k) const {
  RationalMatrix3 result = identity();
  RationalMatrix3 base = *this;
  while (k) {
    if (k & 1u) result = result * base;
    base = base * base;
    k >>= 1u;
  }
  return result;
}

bool RationalMatrix3::is_orthogonal() const { return transpose() * (*this) == identity(); }

bool RationalMatrix3::is_rotation() const { return is_orthogonal() && determinant() == Rational(1); }

RationalMatrix3 operator*(const RationalMatrix3& a, const RationalMatrix3& b) {
  RationalMatrix3 p;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) p.m_[r][c] = a.m_[r][0] * b.m_[0][c] + a.m_[r][1] * b.m_[1][c] + a.m_[r][2] * b.m_[2][c];
  return p;
}

Vec3 operator*(const RationalMatrix3& a, const Vec3& v) {
  return {a.m_[0][0] * v[0] + a.m_[0][1] * v[1] + a.m_[0][2] * v[2],
          a.m_[1][0] * v[0] + a.m_[1][1] * v[1] + a.m_[1][2] * v[2],
          a.m_[2][0] * v[0] + a.m_[2][1] * v[1] + a.m_[2][2] * v[2]};
}

std::string RationalMatrix3::to_string() const {
  std::string s = "[";
  for (int r = 0; r < 3; ++r) {
    s += "[";
    for (int c = 0; c < 3; ++c) s += m_[r][c].to_string() + (c < 2 ? "," : "");
    s += r < 2 ? "]," : "]";
  }
  return s + "]";
}

}  // namespace instanton
