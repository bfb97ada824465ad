#pragma once

#include <array>
#include <optional>
#include <string>

#include "instanton/rational.hpp"

namespace instanton {

using Vec3 = std::array<Rational, 3>;

Vec3 operator+(const Vec3& a, const Vec3& b);
Vec3 operator-(const Vec3& a, const Vec3& b);
Vec3 operator*(const Rational& s, const Vec3& v);
Rational dot(const Vec3& a, const Vec3& b);
Vec3 cross(const Vec3& a, const Vec3& b);
bool is_zero(const Vec3& v);
/// Rescales a nonzero rational vector to the primitive integer vector on the
/// same ray.
Vec3 primitive_direction(const Vec3& v);
/// Primitive direction of the line spanned by v, with first nonzero entry > 0.
Vec3 canonical_axis(const Vec3& v);
std::string to_string(const Vec3& v);

/// 3x3 matrix with exact rational entries. Orthogonality is a query, not a
/// construction-time guarantee, so candidate symmetries can be built and then
/// validated.
class RationalMatrix3 {
 public:
  RationalMatrix3() = default;
  explicit RationalMatrix3(std::array<std::array<Rational, 3>, 3> rows) : m_(std::move(rows)) {}

  static RationalMatrix3 identity();
  /// Matrix whose columns are c0, c1, c2.
  static RationalMatrix3 from_columns(const Vec3& c0, const Vec3& c1, const Vec3& c2);
  /// Rotation by a half turn about the given (nonzero) axis: 2 a a^T / |a|^2 - I.
  static RationalMatrix3 half_turn(const Vec3& axis);

  const Rational& operator()(int r, int c) const { return m_[r][c]; }
  Rational& operator()(int r, int c) { return m_[r][c]; }

  RationalMatrix3 transpose() const;
  Rational determinant() const;
  Rational trace() const;
  std::optional<RationalMatrix3> inverse() const;
  RationalMatrix3 power(unsigned k) const;

  /// M^T M = I and det M = 1, checked exactly.
  bool is_rotation() const;
  bool is_orthogonal() const;

  friend RationalMatrix3 operator*(const RationalMatrix3& a, const RationalMatrix3& b);
  friend Vec3 operator*(const RationalMatrix3& a, const Vec3& v);
  friend bool operator==(const RationalMatrix3&, const RationalMatrix3&) = default;

  std::string to_string() const;

 private:
  std::array<std::array<Rational, 3>, 3> m_{};
};

}  // namespace instanton
