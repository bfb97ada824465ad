#include <doctest.h>

#include "instanton/error.hpp"
#include "instanton/eta.hpp"
#include "instanton/invariants.hpp"
#include "oracles.hpp"

using namespace instanton;
using oracle::q;

TEST_CASE("catalog rows") {
  const auto a = catalog_lookup(DynkinType::A, 5);
  CHECK(a.dynkin == "A4");
  CHECK(a.gamma.to_string() == "Z5");
  CHECK(a.gamma_order == 5);
  CHECK(a.euler == 5);
  CHECK(a.signature == -4);
  const auto e8 = catalog_lookup(DynkinType::E8);
  CHECK(e8.gamma.to_string() == "I*");
  CHECK((e8.gamma_order == 120 && e8.euler == 9 && e8.signature == -8));
  const auto d = catalog_lookup(DynkinType::D, 2);
  CHECK(d.dynkin == "D4");
  CHECK(d.gamma.to_string() == "D*8");
  CHECK((d.gamma_order == 8 && d.euler == 5 && d.signature == -4));
  CHECK(catalog_lookup(DynkinType::E6).gamma.to_string() == "T*");
  CHECK(catalog_lookup(DynkinType::E7).gamma_order == 48);
  CHECK(catalog_lookup(DynkinType::A, 1).gamma.to_string() == "1");
  CHECK_THROWS_AS(catalog_lookup(DynkinType::A, 0), ValidationError);
  CHECK_THROWS_AS(catalog_lookup(DynkinType::D, 1), ValidationError);
  CHECK(parse_dynkin_type("e7") == DynkinType::E7);
  CHECK_THROWS_AS(parse_dynkin_type("F4"), ValidationError);
}

TEST_CASE("catalog rows satisfy euler = b2 + 1 and signature = -b2") {
  std::vector<InstantonCatalogEntry> rows{catalog_lookup(DynkinType::E6), catalog_lookup(DynkinType::E7),
                                          catalog_lookup(DynkinType::E8)};
  for (std::int64_t k = 1; k <= 30; ++k) rows.push_back(catalog_lookup(DynkinType::A, k));
  for (std::int64_t k = 2; k <= 30; ++k) rows.push_back(catalog_lookup(DynkinType::D, k));
  for (const auto& r : rows) {
    const std::int64_t nodes = std::stoll(r.dynkin.substr(1));
    CHECK(r.euler == nodes + 1);
    CHECK(r.signature == -nodes);
    CHECK(r.gamma.order() == r.gamma_order);
  }
}

TEST_CASE("quotient invariants") {
  const auto q22 = quotient_invariants(catalog_lookup(DynkinType::A, 2), 2);
  CHECK(q22.euler == 1);
  CHECK(q22.b2 == 0);
  CHECK(q22.pi1_inf_order == 4);
  CHECK(q22.asd_energy == 6);
  const auto q44 = quotient_invariants(catalog_lookup(DynkinType::A, 4), 4);
  CHECK(q44.pi1_inf_order == 16);
  CHECK(q44.asd_energy == q(15, 2));
  const auto e8 = catalog_lookup(DynkinType::E8);
  const auto self = quotient_invariants(e8, 1);
  CHECK(self.euler == e8.euler);
  CHECK(self.signature == e8.signature);
  CHECK(self.pi1_inf_order == e8.gamma_order);
  CHECK(!self.classified_impossible);
  CHECK(quotient_invariants(catalog_lookup(DynkinType::E6), 7).classified_impossible);
  CHECK_THROWS_AS(quotient_invariants(catalog_lookup(DynkinType::A, 5), 2), ValidationError);
  CHECK_THROWS_AS(quotient_invariants(catalog_lookup(DynkinType::A, 5), 0), ValidationError);
  for (std::int64_t d = 1; d <= 12; ++d)
    for (std::int64_t b2 = 0; b2 <= 12; ++b2) {
      const auto qi = quotient_invariants(catalog_lookup(DynkinType::A, d * (b2 + 1)), d);
      CHECK(qi.b2 == b2);
      CHECK(qi.pi1_inf_order == d * d * (b2 + 1));
    }
}

TEST_CASE("gauss bonnet and signature eta") {
  CHECK(gauss_bonnet_energy(Rational(1), 1) == 0);
  CHECK(gauss_bonnet_energy(Rational(1), 4) == 6);
  CHECK(gauss_bonnet_energy(Rational(2), 2) == 12);
  CHECK_THROWS_AS(gauss_bonnet_energy(Rational(0), 2), ValidationError);
  CHECK(signature_eta(Rational(-4), Rational(39)) == q(3, 4));
  CHECK(signature_eta(Rational(0), Rational(0)) == 0);
  for (std::int64_t k = 2; k <= 100; ++k) {
    const auto d = catalog_lookup(DynkinType::D, k);
    const auto inv = quotient_invariants(d, 1);
    const Rational eta = signature_eta(inv.signature, inv.asd_energy);
    CHECK(eta == q(k, 3) + q(1, 6 * k));
    CHECK(eta == eta_dihedral_closed(1, k));
  }
}

TEST_CASE("energy lower bound") {
  CHECK(corollary_b_bound(0) == 6);
  CHECK(corollary_b_bound(1) == 12);
  CHECK(corollary_b_bound(2) == q(64, 3));
  CHECK_THROWS_AS(corollary_b_bound(-1), ValidationError);
}

TEST_CASE("b2 = 0 quotient descriptor") {
  const auto c4 = corollary_c_descriptor(4);
  CHECK(c4.d == 4);
  CHECK(c4.invariants.b2 == 0);
  CHECK(c4.invariants.pi1_inf_order == 16);
  CHECK(!c4.flat);
  const auto c1 = corollary_c_descriptor(1);
  CHECK(c1.d == 1);
  CHECK(c1.flat);
  CHECK(c1.invariants.asd_energy == 0);
  CHECK(corollary_c_descriptor(2).invariants.asd_energy == 6);
}
