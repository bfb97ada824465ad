#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "instanton/finite_group.hpp"
#include "instanton/group_catalog.hpp"
#include "instanton/group_spec.hpp"

namespace instanton::groups {

/// A subgroup together with its catalog type, when one was confirmed.
struct TaggedSubgroup {
  ElementSet elements;
  std::optional<GroupSpec> type;
};

/// Distinct cyclic subgroups, ordered by size then content.
std::vector<ElementSet> cyclic_subgroups(const FiniteGroup& g);

/// Every subgroup of g, ordered by size then content. Built as the closure of
/// the cyclic subgroups under joins, which reaches every subgroup.
std::vector<ElementSet> all_subgroups(const FiniteGroup& g);

/// Normal subgroups of g (requires |g| <= 360), each tagged via identify().
std::vector<TaggedSubgroup> normal_subgroups(const FiniteGroup& g);

/// Catalog type of the subgroup h, proposed by profile fingerprint and
/// confirmed by a relation witness inside h. nullopt when nothing matches.
std::optional<GroupSpec> identify(const FiniteGroup& g, const ElementSet& h);

/// A Sylow 2-subgroup, grown greedily from the smallest 2-power elements.
TaggedSubgroup sylow_2_subgroup(const FiniteGroup& g);

/// Witness generators of a subgroup isomorphic to `target`, if any.
std::optional<std::vector<Element>> contains_subgroup_isomorphic_to(const FiniteGroup& g, const GroupSpec& target);

/// |Out(g)| by counting generator images that satisfy `pres` and generate g.
/// `generators` must satisfy `pres` and generate g.
std::int64_t outer_automorphism_order(const FiniteGroup& g, const std::vector<Element>& generators,
                                      const Presentation& pres);

/// Same, using the catalog presentation and least witness for `spec`.
std::int64_t outer_automorphism_order(const FiniteGroup& g, const GroupSpec& spec);

}  // namespace instanton::groups
