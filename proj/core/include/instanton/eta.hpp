#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "instanton/monomial.hpp"
#include "instanton/rational.hpp"

namespace instanton {

/// An eta value: always a double, plus the exact rational when known.
struct EtaValue {
  std::optional<Rational> exact;
  double numeric = 0.0;
};

/// A finite group of monomial unitaries acting freely on S^3.
class SpaceFormRep {
 public:
  /// Validates identity, closure, declared order and freeness.
  SpaceFormRep(std::vector<MonomialUnitary> elements, std::size_t declared_order);

  /// Closure of `generators`; must have exactly `declared_order` elements.
  static SpaceFormRep generated_by(const std::vector<MonomialUnitary>& generators, std::size_t declared_order);

  const std::vector<MonomialUnitary>& elements() const { return elements_; }
  std::size_t order() const { return elements_.size(); }

  /// (u, v) when this is the standard representation of Z_u x D*_4v, which
  /// enables the closed-form cross-check in eta_space_form.
  const std::optional<std::pair<std::int64_t, std::int64_t>>& dihedral_tag() const { return tag_; }
  void set_dihedral_tag(std::int64_t u, std::int64_t v) { tag_ = std::make_pair(u, v); }

 private:
  std::vector<MonomialUnitary> elements_;
  std::optional<std::pair<std::int64_t, std::int64_t>> tag_;
};

/// Fixed-point contribution -cot(pi t1) cot(pi t2) of a single element with
/// eigenvalue turns t1, t2. Throws FixedPointError if a turn is 0.
EtaValue eta_element(const MonomialUnitary& m);

/// eta(S^3/G) = (1/|G|) sum over g != 1 of eta_element(g).
EtaValue eta_space_form(const SpaceFormRep& rep);

/// Standard free representation of Z_u x D*_4v (u odd, gcd(u, 4v) = 1).
SpaceFormRep dihedral_representation(std::int64_t u, std::int64_t v);

/// 1/(6uv) + v/(3u) - 4 s(v, u).
Rational eta_dihedral_closed(std::int64_t u, std::int64_t v);

/// 1/(6mb) + b/(3m) + the mod-3 piecewise correction; needs m odd,
/// gcd(m, 4b) = 1 and m | b + 3.
Rational eta_case_formula(std::int64_t m, std::int64_t b);

/// The mod-3 piecewise correction alone, for any positive m.
Rational eta_case_term(std::int64_t m);

/// b/(3d) + 1/d + 1/(6bd) - 1, needs d | b + 3.
Rational eta_geometric(std::int64_t b, std::int64_t d);

struct ContradictionScan {
  /// m <= max_m with 1/m - 1 equal to eta_case_term(m).
  std::vector<std::int64_t> family1;
  /// b <= max_b with eta_dihedral_closed(1, 2b) = eta_geometric(b, 2), the
  /// latter evaluated without the divisibility precondition.
  std::vector<std::int64_t> family2;
  /// Same, against 1/(12b) + b/6 (the d = 2 value without its -1/2).
  std::vector<std::int64_t> family2_without_constant;
};

ContradictionScan dihedral_contradiction_scan(std::int64_t max_m, std::int64_t max_b);

}  // namespace instanton
