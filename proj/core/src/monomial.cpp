#include "instanton/monomial.hpp"

namespace instanton {

MonomialUnitary monomial_product(const MonomialUnitary& x, const MonomialUnitary& y) {
  if (x.is_diagonal()) {
    // diag(a, b) * M scales the rows of M.
    return {y.parity(), x.a() + y.a(), x.b() + y.b()};
  }
  if (y.is_diagonal()) {
    // [[0, a], [b, 0]] * diag(c, d) = [[0, a + d], [b + c, 0]]
    return MonomialUnitary::antidiagonal(x.a() + y.b(), x.b() + y.a());
  }
  // [[0, a], [b, 0]] * [[0, c], [d, 0]] = diag(a + d, b + c)
  return MonomialUnitary::diagonal(x.a() + y.b(), x.b() + y.a());
}

MonomialUnitary MonomialUnitary::inverse() const {
  if (is_diagonal()) return diagonal(-a_, -b_);
  // [[0, a], [b, 0]]^-1 = [[0, -b], [-a, 0]]
  return antidiagonal(-b_, -a_);
}

std::pair<Turn, Turn> turn_eigen_angles(const MonomialUnitary& m) {
  if (m.is_diagonal()) return {m.a(), m.b()};
  const Rational h = (m.a() + m.b()).fraction() / Rational(2);
  return {Turn(h), Turn(h + Rational(BigInt(1), BigInt(2)))};
}

std::string MonomialUnitary::to_string() const {
  return std::string(is_diagonal() ? "diag(" : "anti(") + a_.to_string() + "," + b_.to_string() + ")";
}

}  // namespace instanton
