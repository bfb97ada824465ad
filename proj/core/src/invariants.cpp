#include "instanton/invariants.hpp"

#include <algorithm>
#include <cctype>

#include "instanton/error.hpp"

namespace instanton {

DynkinType parse_dynkin_type(std::string_view text) {
  std::string t;
  for (char c : text) t += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  if (t == "A") return DynkinType::A;
  if (t == "D") return DynkinType::D;
  if (t == "E6") return DynkinType::E6;
  if (t == "E7") return DynkinType::E7;
  if (t == "E8") return DynkinType::E8;
  throw ValidationError("parse", "unknown Dynkin type '" + std::string(text) + "' (expected A, D, E6, E7, E8)");
}

InstantonCatalogEntry catalog_lookup(DynkinType type, std::int64_t k) {
  using groups::GroupSpec;
  InstantonCatalogEntry e;
  e.type = type;
  e.k = k;
  switch (type) {
    case DynkinType::A:
      if (k < 1) throw ValidationError("out_of_range", "catalog_lookup: A-type needs k >= 1");
      e.dynkin = "A" + std::to_string(k - 1);
      e.gamma = k == 1 ? GroupSpec::trivial() : GroupSpec::cyclic(k);
      e.gamma_order = k;
      e.euler = k;
      e.signature = 1 - k;
      return e;
    case DynkinType::D:
      if (k < 2) throw ValidationError("out_of_range", "catalog_lookup: D-type needs k >= 2");
      e.dynkin = "D" + std::to_string(k + 2);
      e.gamma = GroupSpec::binary_dihedral(k);
      e.gamma_order = 4 * k;
      e.euler = k + 3;
      e.signature = -k - 2;
      return e;
    case DynkinType::E6:
      e.dynkin = "E6", e.gamma = GroupSpec::binary_tetrahedral(), e.gamma_order = 24, e.euler = 7, e.signature = -6;
      break;
    case DynkinType::E7:
      e.dynkin = "E7", e.gamma = GroupSpec::binary_octahedral(), e.gamma_order = 48, e.euler = 8, e.signature = -7;
      break;
    case DynkinType::E8:
      e.dynkin = "E8", e.gamma = GroupSpec::binary_icosahedral(), e.gamma_order = 120, e.euler = 9, e.signature = -8;
      break;
  }
  e.k = 1;
  return e;
}

Rational gauss_bonnet_energy(const Rational& euler, std::int64_t pi1_inf_order) {
  if (pi1_inf_order < 1) throw ValidationError("out_of_range", "gauss_bonnet_energy: group order must be positive");
  const Rational energy = Rational(8) * (euler - Rational(BigInt(1), BigInt(pi1_inf_order)));
  if (energy.sign() < 0) throw ValidationError("negative_energy", "gauss_bonnet_energy: euler < 1/|pi_1|");
  return energy;
}

Rational signature_eta(const Rational& signature, const Rational& asd_energy) {
  return -signature - asd_energy / Rational(12);
}

Rational corollary_b_bound(std::int64_t b2) {
  if (b2 < 0) throw ValidationError("out_of_range", "corollary_b_bound: b2 must be nonnegative");
  if (b2 == 0) return Rational(6);
  return Rational(8) * (Rational(b2 + 1) - Rational(BigInt(1), BigInt(b2 + 1)));
}

BubbleInvariants quotient_invariants(const InstantonCatalogEntry& cover, std::int64_t d) {
  if (d < 1) throw ValidationError("out_of_range", "quotient_invariants: d must be positive");
  if (cover.euler % d != 0) {
    throw ValidationError("not_divisible", "quotient_invariants: d = " + std::to_string(d) +
                                               " does not divide the Euler characteristic " +
                                               std::to_string(cover.euler));
  }
  BubbleInvariants q;
  q.euler = Rational(cover.euler / d);
  q.b2 = q.euler - 1;
  q.signature = Rational(1) - q.euler;
  q.pi1_inf_order = cover.gamma_order * d;
  q.asd_energy = gauss_bonnet_energy(q.euler, q.pi1_inf_order);
  q.classified_impossible = cover.type != DynkinType::A && d > 1;
  return q;
}

CorollaryCReport corollary_c_descriptor(std::int64_t cover_euler) {
  CorollaryCReport r;
  r.d = cover_euler;
  r.invariants = quotient_invariants(catalog_lookup(DynkinType::A, cover_euler), cover_euler);
  r.flat = cover_euler == 1;
  return r;
}

}  // namespace instanton
