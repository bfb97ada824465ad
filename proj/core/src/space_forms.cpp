#include "instanton/space_forms.hpp"

#include <algorithm>
#include <numeric>

#include "instanton/error.hpp"
#include "instanton/group_catalog.hpp"
#include "instanton/subgroups.hpp"

namespace instanton::groups {

namespace {

// Non-cyclic bases (plus the trivial group) whose order divides n.
std::vector<GroupSpec> bases_dividing(std::int64_t n) {
  std::vector<GroupSpec> out{GroupSpec::trivial()};
  for (std::int64_t b = 2; 4 * b <= n; ++b)
    if (n % (4 * b) == 0) out.push_back(GroupSpec::binary_dihedral(b));
  if (n % 24 == 0) out.push_back(GroupSpec::binary_tetrahedral());
  if (n % 48 == 0) out.push_back(GroupSpec::binary_octahedral());
  if (n % 120 == 0) out.push_back(GroupSpec::binary_icosahedral());
  for (std::int64_t v = 2, o = 72; o <= n; ++v, o *= 3)
    if (n % o == 0) out.push_back(GroupSpec::tprime(v));
  for (std::int64_t k = 1; (std::int64_t{8} << (k - 1)) * 3 <= n; ++k) {
    const std::int64_t two = std::int64_t{1} << (k + 2);
    if (n % two != 0) break;
    for (std::int64_t p = 3; two * p <= n; p += 2)
      if (n % (two * p) == 0) out.push_back(GroupSpec::dprime(k, p));
  }
  return out;
}

}  // namespace

std::vector<GroupSpec> space_form_groups_of_order(std::int64_t n) {
  if (n < 1 || n > 10000) {
    throw ValidationError("out_of_range", "space_form_groups_of_order: n must be in [1, 10000]");
  }
  std::vector<GroupSpec> out;
  for (const GroupSpec& base : bases_dividing(n)) {
    const std::int64_t m = n / base.order();
    if (base.family() == Family::trivial) {
      out.push_back(n == 1 ? GroupSpec::trivial() : GroupSpec::cyclic(n));
    } else if (m == 1) {
      out.push_back(base);
    } else if (std::gcd(m, base.order()) == 1) {
      out.push_back(GroupSpec::product(m, base));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<GroupSpec> extension_candidates(const GroupSpec& normal, std::int64_t quotient_order) {
  if (quotient_order < 1) throw ValidationError("out_of_range", "extension_candidates: quotient order must be positive");
  const std::int64_t n = normal.order() * quotient_order;
  if (n > 360) throw ValidationError("too_large", "extension_candidates: total order exceeds 360");
  std::vector<GroupSpec> out;
  for (const GroupSpec& spec : space_form_groups_of_order(n)) {
    const FiniteGroup g = construct_group(spec);
    for (const ElementSet& h : all_subgroups(g)) {
      if (static_cast<std::int64_t>(h.size()) != normal.order() || !is_normal(g, h)) continue;
      if (find_witness(g, h, normal)) {
        out.push_back(spec);
        break;
      }
    }
  }
  return out;
}

}  // namespace instanton::groups
