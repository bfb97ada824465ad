#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "instanton/rational.hpp"

namespace instanton {

/// Seifert invariants (b; (a_1, b_1), ..., (a_n, b_n)), written "b; a1/b1, a2/b2, ...".
struct SeifertInvariants {
  std::int64_t b = 0;
  std::vector<std::pair<std::int64_t, std::int64_t>> pairs;

  static SeifertInvariants parse(std::string_view text);
  std::string to_string() const;
};

/// Neumann's c-function, evaluated by sign normalization, reduction of a
/// modulo 2b and the descent c(a, b) = c(a, b - a) + 1. Needs a odd and
/// gcd(a, b) = 1.
std::int64_t c_function(std::int64_t a, std::int64_t b);

struct EulerNumber {
  Rational normalized;  // sum b_i / a_i
  Rational general;     // sum b_i / a_i - b
};

EulerNumber euler_number(const SeifertInvariants& s);

struct Z2HomologyCheck {
  bool z2_homology_sphere = false;
  BigInt certificate;  // a_1 ... a_n (sum b_i/a_i - b)
};

/// Throws ValidationError("non_integral_certificate") if the product is not an integer.
Z2HomologyCheck is_z2_homology_sphere(const SeifertInvariants& s);

struct RokhlinResult {
  Rational mu;
  std::optional<int> mod2;  // present when mu is an integer
  std::vector<std::int64_t> c_values;
  int euler_sign = 0;
};

/// (sum c(a_i - b_i, a_i) + sign e) / 8. Requires b = 0, exactly one even a_i,
/// every a_i - b_i odd and an odd Z2 certificate.
RokhlinResult rokhlin_mu(const SeifertInvariants& s);

/// Representative of x mod 2 in [0, 2), or nullopt when x is not an integer.
std::optional<int> mod2_class(const Rational& x);

struct SpinBoundaryReport {
  Rational mu;
  Rational signature;
  Rational required;     // signature / 8
  bool contradiction = false;  // mu and required differ mod 2
};

/// Checks mu == signature/8 (mod 2), the condition for a spin filling.
SpinBoundaryReport spin_boundary_check(const Rational& mu, const Rational& signature);

struct TetrahedralReport {
  SeifertInvariants boundary;
  Rational cover_euler;
  std::int64_t degree = 0;
  Rational euler;
  Rational signature;
  SpinBoundaryReport spin;
};

/// The Z_7 x T* quotient of the E6 instanton: chi = 7/7, tau = 1 - chi = 0,
/// but the boundary has mu = -1/4.
TetrahedralReport tetrahedral_contradiction();

}  // namespace instanton
