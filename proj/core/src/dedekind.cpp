#include "instanton/dedekind.hpp"

#include <cmath>
#include <numbers>

#include "instanton/error.hpp"

namespace instanton::dedekind {

Rational sawtooth(const Rational& x) {
  if (x.is_integer()) return Rational(0);
  return x.frac() - Rational(BigInt(1), BigInt(2));
}

namespace {

void require_positive_modulus(const BigInt& c) {
  if (c <= 0) {
    throw ValidationError("bad_modulus", "Dedekind sum: modulus must be positive, got " + c.str());
  }
}

Rational s_brute(const BigInt& b, const BigInt& c) {
  Rational total;
  for (BigInt i = 1; i < c; ++i) {
    total += sawtooth(Rational(i, c)) * sawtooth(Rational(b * i, c));
  }
  return total;
}

// Reciprocity as a reduction: s(b, c) = R(b, c) - s(c mod b, b), where
// R(b, c) = (b/c + 1/(bc) + c/b)/12 - 1/4, until the modulus reaches 1.
Rational s_fast(BigInt b, BigInt c) {
  Rational total;
  int sgn = 1;
  b = mod_positive(b, c);
  while (c > 1) {
    if (b == 0) {
      throw ValidationError("not_coprime", "s_sum(fast): arguments are not coprime");
    }
    const Rational bc(b, c);
    const Rational recip = (bc + Rational(BigInt(1), b * c) + bc.reciprocal()) / Rational(12) -
                           Rational(BigInt(1), BigInt(4));
    if (sgn > 0) {
      total += recip;
    } else {
      total -= recip;
    }
    sgn = -sgn;
    BigInt next_b = c % b;
    c = std::move(b);
    b = std::move(next_b);
  }
  return total;
}

}  // namespace

Rational s_sum(const BigInt& b, const BigInt& c, Method method) {
  require_positive_modulus(c);
  if (method == Method::brute) return s_brute(b, c);
  if (mod_positive(b, c) == 0) return Rational(0);
  if (gcd(b, c) != 1) {
    throw ValidationError("not_coprime", "s_sum(fast): gcd(" + b.str() + ", " + c.str() + ") != 1");
  }
  return s_fast(b, c);
}

void require_pairwise_coprime(const BigInt& a, const BigInt& b, const BigInt& c) {
  if (gcd(a, b) != 1 || gcd(b, c) != 1 || gcd(a, c) != 1) {
    throw ValidationError("not_coprime", "Dedekind sum D(" + a.str() + ", " + b.str() + "; " + c.str() +
                                             ") needs pairwise coprime arguments");
  }
}

Rational d_sum(const BigInt& a, const BigInt& b, const BigInt& c_in, Method method) {
  if (c_in == 0) throw ValidationError("bad_modulus", "Dedekind sum: modulus must be nonzero");
  require_pairwise_coprime(a, b, c_in);
  const BigInt c = c_in < 0 ? BigInt(-c_in) : c_in;
  if (method == Method::brute) {
    Rational total;
    for (BigInt i = 1; i < c; ++i) {
      total += sawtooth(Rational(a * i, c)) * sawtooth(Rational(b * i, c));
    }
    return total;
  }
  if (c == 1) return Rational(0);
  // D(a, b; c) = D(1, b a^{-1}; c) since i -> a^{-1} i permutes the residues.
  return s_fast(mod_positive(b * mod_inverse(a, c), c), c);
}

Rational rademacher_defect(const BigInt& a, const BigInt& b, const BigInt& c) {
  if (a <= 0 || b <= 0 || c <= 0) {
    throw ValidationError("bad_modulus", "rademacher_defect: arguments must be positive");
  }
  require_pairwise_coprime(a, b, c);
  const Rational lhs = d_sum(a, b, c) + d_sum(b, c, a) + d_sum(c, a, b);
  const Rational rhs = Rational(a * a + b * b + c * c, 12 * a * b * c) - Rational(BigInt(1), BigInt(4));
  return lhs - rhs;
}

Rational d_special(const BigInt& x, const BigInt& y) {
  if (x <= 0 || y <= 0) throw ValidationError("bad_argument", "d_special: x and y must be positive");
  if (gcd(2 * x, y) != 1) {
    throw ValidationError("not_coprime", "d_special: gcd(2x, y) must be 1 (x=" + x.str() + ", y=" + y.str() + ")");
  }
  return Rational(BigInt(1), 12 * x * y) + Rational(y, 6 * x) - Rational(BigInt(1), BigInt(4)) -
         Rational(2) * s_sum(y, x, Method::fast);
}

double cotangent_sum(long long p, long long q, long long r) {
  if (r <= 0) throw ValidationError("bad_modulus", "cotangent_sum: modulus must be positive");
  const long double pi = std::numbers::pi_v<long double>;
  auto cot_turn = [&](long long num) {
    // cot(pi * num / r), with num reduced mod r to keep the angle small.
    long long m = num % r;
    if (m < 0) m += r;
    if (m == 0) throw ValidationError("pole", "cotangent_sum: cot(pi k) is undefined");
    const long double x = pi * static_cast<long double>(m) / static_cast<long double>(r);
    return std::cos(x) / std::sin(x);
  };
  long double total = 0;
  for (long long k = 1; k < r; ++k) {
    total += cot_turn(p % r * k) * cot_turn(q % r * k);
  }
  return static_cast<double>(total / (4.0L * static_cast<long double>(r)));
}

}  // namespace instanton::dedekind
