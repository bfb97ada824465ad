#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "instanton/finite_group.hpp"
#include "instanton/group_spec.hpp"

namespace instanton::groups {

/// Builds the group named by `spec`:
///   - cyclic groups as turns k/m under addition;
///   - D*_{4b} as monomial unitaries generated by diag(1/2b, -1/2b) and
///     antidiag(0, 1/2);
///   - T* as the 24 Hurwitz units, O* and I* as unit quaternions over
///     Q(sqrt 2) and Q(sqrt 5);
///   - D'(k,p) as pairs (c, d) with (c,d)(c',d') = (c+c', d(-1)^c' + d');
///   - T'(v) as pairs (x-exponent, Q8 unit) twisted by p -> q, q -> pq;
///   - products as direct products.
/// The element count is checked against spec.order().
FiniteGroup construct_group(const GroupSpec& spec);

/// Group word: generator i (1-based) as +i, its inverse as -i.
using Word = std::vector<int>;

/// Finitely presented group <g_1..g_n | lhs_j = rhs_j> together with the
/// orders the generators must have in any faithful image.
struct Presentation {
  int generators = 0;
  std::vector<std::pair<Word, Word>> relations;
  std::vector<unsigned> generator_orders;
};

/// The defining presentation used for witness searches. Products have none
/// (they are certified through a central cyclic factor instead).
std::optional<Presentation> presentation_of(const GroupSpec& spec);

Element evaluate(const FiniteGroup& g, const Word& w, std::span<const Element> images);
bool satisfies(const FiniteGroup& g, const Presentation& pres, std::span<const Element> images);

/// Lexicographically least generator tuple drawn from `domain` that satisfies
/// spec's presentation and generates a subgroup of exactly spec.order()
/// elements. For products Z_m x B the tuple is (c, witness of B) with c of
/// order m centralizing the B-witness.
std::optional<std::vector<Element>> find_witness(const FiniteGroup& g, const ElementSet& domain,
                                                 const GroupSpec& spec);

}  // namespace instanton::groups
