// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "instanton/dedekind.hpp"
#include "instanton/error.hpp"
#include "instanton/eta.hpp"
#include "instanton/group_catalog.hpp"
#include "instanton/invariants.hpp"
#include "instanton/monopole.hpp"
#include "instanton/rokhlin.hpp"
#include "instanton/space_forms.hpp"
#include "instanton/subgroups.hpp"

using namespace instanton;
using namespace instanton::groups;
namespace dk = instanton::dedekind;

namespace {

using Check = std::function<bool(std::string&)>;

Rational frac(std::int64_t p, std::int64_t q) { return Rational(BigInt(p), BigInt(q)); }

bool coprime(std::int64_t a, std::int64_t b) { return std::gcd(a, b) == 1; }

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", x);
  return buf;
}

bool criterion_dedekind(std::string& why) {
  for (std::int64_t c = 1; c <= 200; ++c)
    for (std::int64_t b = -c; b <= 2 * c; ++b) {
      if (!coprime(b, c)) continue;
      if (dk::s_sum(b, c, dk::Method::fast) != dk::s_sum(b, c, dk::Method::brute)) {
        why = "s_sum mismatch at b=" + std::to_string(b) + " c=" + std::to_string(c);
        return false;
      }
    }
  std::size_t triples = 0;
  for (std::int64_t a = 1; a <= 100000; ++a)
    for (std::int64_t b = a; a * b * b <= 100000; ++b) {
      if (!coprime(a, b)) continue;
      for (std::int64_t c = b; a * b * c <= 100000; ++c) {
        if (!coprime(a, c) || !coprime(b, c)) continue;
        ++triples;
        if (!dk::rademacher_defect(a, b, c).is_zero()) {
          why = "nonzero defect at " + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c);
          return false;
        }
      }
    }
  std::size_t special = 0;
  for (std::int64_t x = 1; 2 * x <= 400; ++x)
    for (std::int64_t y = 1; 2 * x * y <= 400; ++y) {
      Rational value;
      try {
        value = dk::d_special(x, y);
      } catch (const ValidationError&) {
        continue;
      }
      ++special;
      if (value != dk::d_sum(2 * x + y, 2 * x - y, 2 * x * y, dk::Method::brute)) {
        why = "d_special mismatch at x=" + std::to_string(x) + " y=" + std::to_string(y);
        return false;
      }
    }
  why = std::to_string(triples) + " triples, " + std::to_string(special) + " special pairs";
  return triples > 0 && special > 0;
}

bool criterion_cotangent(std::string& why) {
  double worst = 0;
  std::size_t n = 0;
  for (long long r = 2; r <= 60; ++r)
    for (long long p = 1; p < r; ++p)
      for (long long q = 1; q < r; ++q) {
        if (std::gcd(p, r) != 1 || std::gcd(q, r) != 1 || std::gcd(p, q) != 1) continue;
        const double exact = dk::d_sum(p, q, r).to_double();
        const double cot = dk::cotangent_sum(p, q, r);
        worst = std::max(worst, std::abs(exact - cot));
        ++n;
      }
  why = std::to_string(n) + " triples, max error " + sci(worst);
  return worst < 1e-9;
}

bool criterion_eta(std::string& why) {
  double worst = 0;
  std::size_t n = 0;
  for (std::int64_t u = 1; 4 * u <= 400; ++u)
    for (std::int64_t v = 1; 4 * u * v <= 400; ++v) {
      if (!coprime(u, 4 * v)) continue;
      const EtaValue e = eta_space_form(dihedral_representation(u, v));
      worst = std::max(worst, std::abs(e.numeric - eta_dihedral_closed(u, v).to_double()));
      ++n;
    }
  if (!(worst < 1e-9)) {
    why = "numeric error " + sci(worst);
    return false;
  }
  std::size_t cases = 0;
  for (std::int64_t m = 1; m <= 199; m += 2)
    for (std::int64_t b = 1; b <= 400; ++b) {
      if (!coprime(m, 4 * b) || (b + 3) % m != 0) continue;
      ++cases;
      if (eta_case_formula(m, b) != eta_dihedral_closed(m, b)) {
        why = "case formula mismatch at m=" + std::to_string(m) + " b=" + std::to_string(b);
        return false;
      }
    }
  const bool specific = eta_dihedral_closed(1, 2) == frac(3, 4) && eta_dihedral_closed(5, 2) == frac(3, 20) &&
                        eta_dihedral_closed(7, 4) == frac(-5, 56);
  why = std::to_string(n) + " reps, max error " + sci(worst) + ", " + std::to_string(cases) +
        " case-formula points";
  return specific;
}

bool criterion_contradictions(std::string& why) {
  const ContradictionScan scan = dihedral_contradiction_scan(1000000, 1000000);
  const TetrahedralReport t = tetrahedral_contradiction();
  const bool family1 = scan.family1 == std::vector<std::int64_t>{1};
  const bool family2 = scan.family2.empty();
  const bool mu = t.spin.mu == frac(-1, 4) && t.spin.contradiction;
  why = std::string("family1 ") + (family1 ? "{1}" : "wrong") + ", family2 " + (family2 ? "empty" : "nonempty") +
        ", mu " + t.spin.mu.to_string();
  return family1 && family2 && mu;
}

bool criterion_groups(std::string& why) {
  const std::vector<GroupSpec> expected{GroupSpec::cyclic(96), GroupSpec::product(3, GroupSpec::binary_dihedral(8)),
                                        GroupSpec::binary_dihedral(24), GroupSpec::dprime(3, 3)};
  auto got = space_form_groups_of_order(96);
  auto want = expected;
  std::sort(want.begin(), want.end());
  if (got != want) {
    why = "order 96 list differs";
    return false;
  }
  if (!extension_candidates(GroupSpec::binary_icosahedral(), 3).empty() ||
      !extension_candidates(GroupSpec::binary_octahedral(), 2).empty()) {
    why = "I* or O* extension found";
    return false;
  }
  if (extension_candidates(GroupSpec::binary_tetrahedral(), 7) !=
      std::vector<GroupSpec>{GroupSpec::product(7, GroupSpec::binary_tetrahedral())}) {
    why = "T* by 7 extensions differ";
    return false;
  }
  std::size_t dprimes = 0;
  for (std::int64_t k = 1; (std::int64_t{1} << (k + 2)) * 3 <= 200; ++k)
    for (std::int64_t p = 3; (std::int64_t{1} << (k + 2)) * p <= 200; p += 2) {
      const auto spec = GroupSpec::dprime(k, p);
      const auto g = groups::construct_group(spec);
      ++dprimes;
      for (std::int64_t b = 2; 4 * b <= spec.order(); ++b) {
        if (spec.order() % (4 * b) != 0) continue;
        if (contains_subgroup_isomorphic_to(g, GroupSpec::binary_dihedral(b))) {
          why = spec.to_string() + " contains D*" + std::to_string(4 * b);
          return false;
        }
      }
    }
  for (std::int64_t v = 1; v <= 3; ++v) {
    const auto spec = GroupSpec::tprime(v);
    const auto g = groups::construct_group(spec);
    for (std::int64_t b = 3; 4 * b <= spec.order(); ++b) {
      if (spec.order() % (4 * b) != 0) continue;
      if (contains_subgroup_isomorphic_to(g, GroupSpec::binary_dihedral(b))) {
        why = spec.to_string() + " contains D*" + std::to_string(4 * b);
        return false;
      }
    }
  }
  why = "order-96 list, 3 extension queries, " + std::to_string(dprimes) + " D' groups, T'(v<=3)";
  return true;
}

bool criterion_bounds(std::string& why) {
  if (corollary_b_bound(0) != 6) {
    why = "b2 = 0 bound";
    return false;
  }
  for (std::int64_t b2 = 1; b2 <= 50; ++b2)
    if (corollary_b_bound(b2) != 8 * (Rational(b2 + 1) - frac(1, b2 + 1))) {
      why = "bound formula at b2=" + std::to_string(b2);
      return false;
    }
  // Minimum energy per b2 over catalog covers and their admissible A-type quotients.
  std::vector<Rational> best(51);
  std::vector<bool> seen(51, false);
  auto offer = [&](const BubbleInvariants& inv) {
    if (inv.classified_impossible) return;
    if (!inv.b2.is_integer() || inv.b2 < 0 || inv.b2 > 50) return;
    const auto i = static_cast<std::size_t>(inv.b2.floor().convert_to<long long>());
    if (!seen[i] || inv.asd_energy < best[i]) best[i] = inv.asd_energy;
    seen[i] = true;
  };
  std::vector<InstantonCatalogEntry> covers{catalog_lookup(DynkinType::E6), catalog_lookup(DynkinType::E7),
                                            catalog_lookup(DynkinType::E8)};
  for (std::int64_t k = 2; k <= 51 * 50; ++k) covers.push_back(catalog_lookup(DynkinType::A, k));
  for (std::int64_t k = 2; k <= 52; ++k) covers.push_back(catalog_lookup(DynkinType::D, k));
  for (const auto& c : covers)
    for (std::int64_t d = 1; d <= 50; ++d) {
      if (c.type != DynkinType::A && d > 1) break;
      if (c.type == DynkinType::A && c.k % d != 0) continue;
      offer(quotient_invariants(c, d));
    }
  for (std::int64_t b2 = 0; b2 <= 50; ++b2) {
    const auto i = static_cast<std::size_t>(b2);
    if (!seen[i] || best[i] != corollary_b_bound(b2)) {
      why = "minimum not attained at b2=" + std::to_string(b2);
      return false;
    }
  }
  why = "bound and minimization for b2 <= 50";
  return true;
}

bool criterion_consistency(std::string& why) {
  for (std::int64_t k = 2; k <= 100; ++k) {
    const auto inv = quotient_invariants(catalog_lookup(DynkinType::D, k), 1);
    if (signature_eta(inv.signature, inv.asd_energy) != eta_dihedral_closed(1, k)) {
      why = "D-type mismatch at k=" + std::to_string(k);
      return false;
    }
  }
  for (std::int64_t b = 1; b <= 400; ++b)
    if (eta_geometric(b, 1) != eta_dihedral_closed(1, b)) {
      why = "eta_geometric mismatch at b=" + std::to_string(b);
      return false;
    }
  why = "k <= 100, b <= 400";
  return true;
}

bool criterion_monopoles(std::string& why) {
  const MonopoleConfig square({Vec3{1, 0, 0}, Vec3{0, 1, 0}, Vec3{-1, 0, 0}, Vec3{0, -1, 0}});
  const auto free = free_cyclic_subgroups(square);
  std::vector<std::pair<std::int64_t, Vec3>> got;
  for (const auto& s : free) got.emplace_back(s.order, s.axis.value_or(Vec3{}));
  const std::vector<std::pair<std::int64_t, Vec3>> want{
      {4, Vec3{0, 0, 1}}, {2, Vec3{0, 0, 1}}, {2, Vec3{1, -1, 0}}, {2, Vec3{1, 1, 0}}};
  if (got != want) {
    why = "square subgroups differ";
    return false;
  }
  const auto pair = free_cyclic_subgroups(MonopoleConfig({Vec3{0, 0, 1}, Vec3{0, 0, -1}}));
  if (pair.size() != 1 || pair[0].kind != SymmetryKind::perpendicular || pair[0].order != 2 ||
      pair[0].count != "continuum") {
    why = "pair family wrong";
    return false;
  }
  if (!free_cyclic_subgroups(MonopoleConfig({Vec3{0, 0, -1}, Vec3{0, 0, 0}, Vec3{0, 0, 1}})).empty()) {
    why = "collinear triple has a free subgroup";
    return false;
  }
  why = "square 4, pair family, collinear triple none";
  return true;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, Check>> criteria{
      {"1 dedekind kernel", criterion_dedekind},
      {"2 cotangent bridge", criterion_cotangent},
      {"3 eta agreement", criterion_eta},
      {"4 contradiction reproduction", criterion_contradictions},
      {"5 group case analysis", criterion_groups},
      {"6 catalog and bounds", criterion_bounds},
      {"7 cross-module consistency", criterion_consistency},
      {"8 monopole enumeration", criterion_monopoles},
  };
  int failures = 0;
  for (const auto& [name, check] : criteria) {
    std::string why;
    bool ok = false;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      ok = check(why);
    } catch (const std::exception& e) {
      why = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s criterion %s (%.2fs): %s\n", ok ? "PASS" : "FAIL", name.c_str(), secs, why.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
