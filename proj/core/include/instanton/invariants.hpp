#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "instanton/group_spec.hpp"
#include "instanton/rational.hpp"

namespace instanton {

enum class DynkinType { A, D, E6, E7, E8 };

DynkinType parse_dynkin_type(std::string_view text);

/// One row of the instanton table: A_{k-1}, D_{k+2}, E6, E7, E8 with the
/// group at infinity, its order, Euler characteristic and signature.
struct InstantonCatalogEntry {
  DynkinType type = DynkinType::A;
  std::int64_t k = 1;
  std::string dynkin;  // e.g. "A4", "D4", "E8"
  groups::GroupSpec gamma = groups::GroupSpec::trivial();
  std::int64_t gamma_order = 1;
  std::int64_t euler = 1;
  std::int64_t signature = 0;
};

/// k >= 1 for A, k >= 2 for D; ignored for E types.
InstantonCatalogEntry catalog_lookup(DynkinType type, std::int64_t k = 1);

/// Invariants of a bubble; energies in units of pi^2.
struct BubbleInvariants {
  Rational euler;
  Rational b2;
  Rational signature;
  std::int64_t pi1_inf_order = 1;
  Rational asd_energy;
  /// Non-A cover with d > 1: no such quotient exists, kept for tabulation.
  bool classified_impossible = false;
};

BubbleInvariants quotient_invariants(const InstantonCatalogEntry& cover, std::int64_t d);

/// 8 (euler - 1/|pi_1 at infinity|).
Rational gauss_bonnet_energy(const Rational& euler, std::int64_t pi1_inf_order);

/// eta of the boundary: -signature - energy/12.
Rational signature_eta(const Rational& signature, const Rational& asd_energy);

/// Least energy of a bubble with the given b2: 6 if b2 = 0, else 8(b2 + 1 - 1/(b2 + 1)).
Rational corollary_b_bound(std::int64_t b2);

struct CorollaryCReport {
  std::int64_t d = 1;
  BubbleInvariants invariants;
  bool flat = false;
};

/// The b2 = 0 quotient of the Gibbons-Hawking space with the given Euler number.
CorollaryCReport corollary_c_descriptor(std::int64_t cover_euler);

}  // namespace instanton
