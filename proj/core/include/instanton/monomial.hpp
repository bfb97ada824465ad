#pragma once

#include <cstddef>
#include <string>
#include <utility>

#include "instanton/turn.hpp"

namespace instanton {

enum class Parity { diagonal, antidiagonal };

/// A 2x2 unitary with exactly one unit-modulus entry in each row and column.
///
///   diagonal(a, b)      = [[exp a, 0], [0, exp b]]
///   antidiagonal(a, b)  = [[0, exp a], [exp b, 0]]
///
/// The class is closed under multiplication: the product of two elements of
/// equal parity is diagonal, of mixed parity antidiagonal.
class MonomialUnitary {
 public:
  MonomialUnitary() = default;
  MonomialUnitary(Parity p, Turn a, Turn b) : parity_(p), a_(std::move(a)), b_(std::move(b)) {}

  static MonomialUnitary identity() { return {}; }
  static MonomialUnitary diagonal(Turn a, Turn b) { return {Parity::diagonal, std::move(a), std::move(b)}; }
  static MonomialUnitary antidiagonal(Turn a, Turn b) {
    return {Parity::antidiagonal, std::move(a), std::move(b)};
  }

  Parity parity() const { return parity_; }
  bool is_diagonal() const { return parity_ == Parity::diagonal; }
  const Turn& a() const { return a_; }
  const Turn& b() const { return b_; }

  bool is_identity() const { return is_diagonal() && a_.is_zero() && b_.is_zero(); }
  MonomialUnitary inverse() const;

  std::string to_string() const;

  friend bool operator==(const MonomialUnitary&, const MonomialUnitary&) = default;

 private:
  Parity parity_ = Parity::diagonal;
  Turn a_;
  Turn b_;
};

MonomialUnitary monomial_product(const MonomialUnitary& x, const MonomialUnitary& y);
inline MonomialUnitary operator*(const MonomialUnitary& x, const MonomialUnitary& y) {
  return monomial_product(x, y);
}

/// Eigenvalue turns of the matrix. Diagonal: (a, b). Antidiagonal: the two
/// square roots of exp(a + b), returned as (h, h + 1/2) with h in [0, 1/2).
std::pair<Turn, Turn> turn_eigen_angles(const MonomialUnitary& m);

}  // namespace instanton

template <>
struct std::hash<instanton::MonomialUnitary> {
  std::size_t operator()(const instanton::MonomialUnitary& m) const {
    std::size_t h = std::hash<instanton::Turn>{}(m.a());
    h = h * 1000003u ^ std::hash<instanton::Turn>{}(m.b());
    return h * 31u + (m.is_diagonal() ? 0u : 1u);
  }
};
