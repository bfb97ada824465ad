#include <doctest.h>

#include "instanton/dedekind.hpp"
#include "instanton/error.hpp"
#include "oracles.hpp"

using namespace instanton;
using namespace instanton::dedekind;
using oracle::q;

TEST_CASE("sawtooth") {
  CHECK(sawtooth(Rational(7)) == 0);
  CHECK(sawtooth(q(1, 3)) == q(-1, 6));
  CHECK(sawtooth(q(1, 2)) == 0);
  CHECK(sawtooth(q(-5, 4)) == q(1, 4));
  for (int n = -30; n <= 30; ++n)
    for (int d = 1; d <= 12; ++d) {
      CHECK(sawtooth(q(-n, d)) == -sawtooth(q(n, d)));
      CHECK(sawtooth(q(n, d)) == oracle::saw(n, d));
    }
}

TEST_CASE("s_sum examples") {
  for (auto m : {Method::brute, Method::fast}) {
    CHECK(s_sum(0, 3, m) == 0);
    CHECK(s_sum(1, 3, m) == q(1, 18));
    CHECK(s_sum(2, 5, m) == 0);
    CHECK(s_sum(4, 7, m) == q(1, 14));
  }
  CHECK_THROWS_AS(s_sum(1, 0), ValidationError);
  CHECK_THROWS_AS(s_sum(1, -3), ValidationError);
  CHECK_THROWS_AS(s_sum(2, 4, Method::fast), ValidationError);
  CHECK(s_sum(2, 4, Method::brute) == oracle::dedekind(1, 2, 4));
}

TEST_CASE("s_sum fast equals brute and the definition, c <= 200") {
  for (std::int64_t c = 1; c <= 200; ++c)
    for (std::int64_t b = -c; b <= 2 * c; b += (c > 60 ? 7 : 1)) {
      if (std::gcd(b, c) != 1) continue;
      const Rational fast = s_sum(b, c, Method::fast);
      REQUIRE(fast == s_sum(b, c, Method::brute));
      if (c <= 60) REQUIRE(fast == oracle::dedekind(1, b, c));
    }
}

TEST_CASE("s_sum periodicity and reciprocity") {
  for (std::int64_t c = 2; c <= 80; ++c)
    for (std::int64_t b = 1; b < c; ++b) {
      if (std::gcd(b, c) != 1) continue;
      CHECK(s_sum(b + c, c) == s_sum(b, c));
      CHECK(s_sum(-b, c) == -s_sum(b, c));
      CHECK(s_sum(b, c) + s_sum(c, b) == q(b * b + c * c + 1, 12 * b * c) - q(1, 4));
    }
}

TEST_CASE("d_sum examples and methods") {
  for (auto m : {Method::brute, Method::fast}) {
    CHECK(d_sum(1, 1, 2, m) == 0);
    CHECK(d_sum(5, -1, 6, m) == q(5, 18));
    CHECK(d_sum(1, 1, 3, m) == q(1, 18));
  }
  CHECK_THROWS_AS(d_sum(2, 1, 4), ValidationError);
  CHECK_THROWS_AS(d_sum(3, 3, 5), ValidationError);
  CHECK_THROWS_AS(d_sum(1, 1, 0), ValidationError);
  try {
    d_sum(2, 1, 4);
  } catch (const ValidationError& e) {
    CHECK(e.cause() == "not_coprime");
  }
  for (std::int64_t c = 1; c <= 40; ++c)
    for (std::int64_t a = -12; a <= 12; ++a)
      for (std::int64_t b = -12; b <= 12; ++b) {
        if (!oracle::pairwise_coprime(a, b, c)) continue;
        const Rational d = d_sum(a, b, c);
        REQUIRE(d == d_sum(a, b, c, Method::brute));
        REQUIRE(d == oracle::dedekind(a, b, c));
        CHECK(d_sum(-a, b, c) == -d);
        if (oracle::pairwise_coprime(a + c, b + c, c)) CHECK(d_sum(a + c, b + c, c) == d);
      }
}

TEST_CASE("d_sum unit scaling") {
  for (std::int64_t c = 2; c <= 25; ++c)
    for (std::int64_t a = 1; a < c; ++a)
      for (std::int64_t b = 1; b < c; ++b) {
        if (!oracle::pairwise_coprime(a, b, c)) continue;
        for (std::int64_t d = 1; d < c; ++d)
          if (std::gcd(d, c) == 1) CHECK(oracle::dedekind(a * d, b * d, c) == d_sum(a, b, c));
      }
}

TEST_CASE("rademacher defect vanishes") {
  CHECK(rademacher_defect(1, 1, 2) == 0);
  CHECK(rademacher_defect(1, 2, 3) == 0);
  CHECK(rademacher_defect(3, 5, 7) == 0);
  for (std::int64_t a = 1; a <= 15; ++a)
    for (std::int64_t b = 1; b <= 15; ++b)
      for (std::int64_t c = 1; c <= 15; ++c)
        if (oracle::pairwise_coprime(a, b, c)) {
          const Rational lhs = oracle::dedekind(a, b, c) + oracle::dedekind(b, c, a) + oracle::dedekind(c, a, b);
          CHECK(lhs == q(a * a + b * b + c * c, 12 * a * b * c) - q(1, 4));
          CHECK(rademacher_defect(a, b, c) == 0);
        }
  CHECK_THROWS_AS(rademacher_defect(2, 4, 3), ValidationError);
  CHECK_THROWS_AS(rademacher_defect(0, 1, 1), ValidationError);
}

TEST_CASE("d_special closed form") {
  CHECK(d_special(1, 3) == q(5, 18));
  CHECK(d_special(1, 1) == 0);
  CHECK(d_special(2, 1) == q(-1, 8));
  for (std::int64_t x = 1; x <= 50; ++x)
    for (std::int64_t y = 1; 2 * x * y <= 400; ++y) {
      if (std::gcd(2 * x, y) != 1) continue;
      CHECK(d_special(x, y) == oracle::dedekind(2 * x + y, 2 * x - y, 2 * x * y));
    }
  CHECK_THROWS_AS(d_special(1, 2), ValidationError);
  CHECK_THROWS_AS(d_special(3, 3), ValidationError);
  CHECK_THROWS_AS(d_special(0, 1), ValidationError);
}

TEST_CASE("cotangent bridge") {
  for (std::int64_t r = 2; r <= 30; ++r)
    for (std::int64_t p = 1; p < r; ++p)
      for (std::int64_t qq = -r; qq < r; ++qq) {
        if (!oracle::pairwise_coprime(p, qq, r)) continue;
        const double cot = cotangent_sum(p, qq, r);
        CHECK(std::abs(cot - oracle::dedekind_cot(p, qq, r)) < 1e-9);
        CHECK(std::abs(cot - d_sum(p, qq, r).to_double()) < 1e-9);
      }
}
