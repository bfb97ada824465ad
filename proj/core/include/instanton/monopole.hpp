#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "instanton/invariants.hpp"
#include "instanton/matrix3.hpp"

namespace instanton {

/// A finite set of distinct monopole points in R^3.
class MonopoleConfig {
 public:
  explicit MonopoleConfig(std::vector<Vec3> points);

  const std::vector<Vec3>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  Vec3 center_of_mass() const;
  bool contains(const Vec3& p) const;

 private:
  std::vector<Vec3> points_;
};

/// Translate so the mean of the points is the origin.
MonopoleConfig recenter(const MonopoleConfig& f);

/// Gibbons-Hawking potential (1/2) sum 1/|x - p_i|.
double potential(const MonopoleConfig& f, const Vec3& x);

enum class SymmetryKind {
  discrete,       // a single cyclic subgroup
  about_line,     // rotations of any order about the line of a collinear set
  perpendicular,  // half-turns about any axis perpendicular to that line
  any_axis,       // a single point at the origin: all of SO(3)
};

std::string to_string(SymmetryKind k);

struct CyclicSymmetry {
  SymmetryKind kind = SymmetryKind::discrete;
  std::int64_t order = 0;  // 0 means any order (about_line, any_axis)
  std::optional<Vec3> axis;  // primitive, first nonzero entry positive; a representative for families
  std::optional<RationalMatrix3> generator;  // smallest positive rotation about `axis`
  bool free = false;  // no monopole on the axis
  std::string count = "1";  // "continuum" for families
};

/// Cyclic rotation subgroups preserving a centered configuration, by order
/// descending, then axis ascending.
std::vector<CyclicSymmetry> symmetry_rotations(const MonopoleConfig& f);

/// The members of symmetry_rotations acting freely on the points.
std::vector<CyclicSymmetry> free_cyclic_subgroups(const MonopoleConfig& f);

struct QuotientDescriptor {
  std::optional<CyclicSymmetry> symmetry;  // empty for the trivial quotient
  BubbleInvariants invariants;
  std::optional<Vec3> kahler_axis;
  bool corollary_c = false;  // b2 = 0
  bool flat = false;         // zero energy
};

/// Trivial quotient first, then one entry per free cyclic subgroup (or family).
std::vector<QuotientDescriptor> classify_quotients(const MonopoleConfig& f);

}  // namespace instanton
