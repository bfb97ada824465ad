#pragma once

#include "instanton/rational.hpp"

namespace instanton::dedekind {

enum class Method { brute, fast };

/// ((x)) = x - floor(x) - 1/2 off the integers, 0 on them.
Rational sawtooth(const Rational& x);

/// s(b, c) = sum_{i=1}^{c-1} ((i/c)) ((b i / c)).
///
/// `brute` evaluates the defining sum and accepts any b. `fast` runs the
/// reciprocity law s(b,c) + s(c,b) = (b/c + 1/(bc) + c/b)/12 - 1/4 as a
/// Euclid-style reduction and needs gcd(b, c) = 1 (or b = 0 mod c).
/// Throws ValidationError for c <= 0.
Rational s_sum(const BigInt& b, const BigInt& c, Method method = Method::fast);

/// D(a, b; c) = sum_{i=1}^{|c|-1} ((a i / c)) ((b i / c)) for pairwise
/// coprime a, b, c. A negative modulus is replaced by |c|, which leaves every
/// term unchanged. `fast` reduces to s(b a^{-1} mod c, c).
Rational d_sum(const BigInt& a, const BigInt& b, const BigInt& c, Method method = Method::fast);

/// D(a,b;c) + D(b,c;a) + D(c,a;b) - [(a^2+b^2+c^2)/(12abc) - 1/4].
/// Zero for every pairwise coprime triple of positive integers.
Rational rademacher_defect(const BigInt& a, const BigInt& b, const BigInt& c);

/// D(2x+y, 2x-y; 2xy) through the closed form
/// 1/(12xy) + y/(6x) - 1/4 - 2 s(y, x). Requires x, y > 0 and gcd(2x, y) = 1.
Rational d_special(const BigInt& x, const BigInt& y);

/// (1/4r) sum_{k=1}^{r-1} cot(pi p k / r) cot(pi q k / r), evaluated in
/// extended precision. Equals D(p, q; r) for pairwise coprime arguments.
double cotangent_sum(long long p, long long q, long long r);

void require_pairwise_coprime(const BigInt& a, const BigInt& b, const BigInt& c);

}  // namespace instanton::dedekind
