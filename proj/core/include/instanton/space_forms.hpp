#pragma once

#include <cstdint>
#include <vector>

#include "instanton/group_spec.hpp"

namespace instanton::groups {

/// All groups of order n acting freely on S^3: a base from
/// {1, D*_4b (b >= 2), T*, O*, I*, T'(v >= 2), D'(k, p)} times a cyclic
/// factor of coprime order. Sorted, without duplicates. Requires n <= 10000.
std::vector<GroupSpec> space_form_groups_of_order(std::int64_t n);

/// Space-form groups G of order |normal| * quotient_order that contain a
/// normal subgroup isomorphic to `normal`. Requires the product <= 360.
std::vector<GroupSpec> extension_candidates(const GroupSpec& normal, std::int64_t quotient_order);

}  // namespace instanton::groups
