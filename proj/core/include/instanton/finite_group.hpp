#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace instanton::groups {

using Element = std::uint32_t;

/// Sorted list of element indices of a subgroup (or any subset).
using ElementSet = std::vector<Element>;

struct GroupProfile {
  std::size_t order = 0;
  std::size_t center_order = 0;
  std::size_t involution_count = 0;
  std::map<unsigned, std::size_t> element_order_histogram;
  /// Invariant factors d1 | d2 | ... of the abelianization, ascending.
  std::vector<std::uint64_t> abelianization_invariants;

  friend bool operator==(const GroupProfile&, const GroupProfile&) = default;
};

/// A finite group given by its full multiplication table over element
/// indices 0..size-1. Immutable once constructed.
class FiniteGroup {
 public:
  /// `table[a * n + b]` is the index of a*b. Throws if the table lacks a
  /// two-sided identity or inverses; associativity is checked separately.
  FiniteGroup(std::vector<std::string> labels, std::vector<Element> table);

  std::size_t size() const { return n_; }
  Element identity() const { return identity_; }
  Element mul(Element a, Element b) const { return table_[static_cast<std::size_t>(a) * n_ + b]; }
  Element inverse(Element a) const { return inverse_[a]; }
  Element power(Element a, std::int64_t k) const;
  Element conjugate(Element x, Element by) const { return mul(mul(by, x), inverse_[by]); }
  Element commutator(Element a, Element b) const { return mul(mul(inverse_[a], inverse_[b]), mul(a, b)); }
  unsigned order_of(Element a) const { return orders_[a]; }
  const std::string& label(Element a) const { return labels_[a]; }

  ElementSet all_elements() const;
  ElementSet center() const;
  ElementSet commutator_subgroup() const;
  bool commutes(Element a, Element b) const { return mul(a, b) == mul(b, a); }

  /// Full O(n^3) associativity check.
  bool is_associative() const;
  /// Associativity on `samples` pseudo-random triples.
  bool is_associative_sampled(std::size_t samples, std::uint64_t seed) const;

  friend bool operator==(const FiniteGroup&, const FiniteGroup&) = default;

 private:
  std::size_t n_;
  std::vector<std::string> labels_;
  std::vector<Element> table_;
  Element identity_ = 0;
  std::vector<Element> inverse_;
  std::vector<unsigned> orders_;
};

/// Subgroup generated by `gens` (the trivial subgroup when empty).
ElementSet generate(const FiniteGroup& g, std::span<const Element> gens);
bool is_subgroup(const FiniteGroup& g, const ElementSet& h);
bool is_normal(const FiniteGroup& g, const ElementSet& h);
/// The subgroup h as a group in its own right, indices renumbered in order.
FiniteGroup restrict_to(const FiniteGroup& g, const ElementSet& h);
/// Elements of `domain` commuting with x.
ElementSet centralizer(const FiniteGroup& g, Element x, const ElementSet& domain);

GroupProfile group_profile(const FiniteGroup& g);

}  // namespace instanton::groups
