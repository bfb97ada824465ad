#include "instanton/eta.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <unordered_set>

#include "instanton/dedekind.hpp"
#include "instanton/error.hpp"

namespace instanton {

namespace {

Rational frac_of(std::int64_t num, std::int64_t den) { return Rational(BigInt(num), BigInt(den)); }

long double cot_turn(const Turn& t) {
  const long double x = std::numbers::pi_v<long double> * t.fraction().to_long_double();
  return std::cos(x) / std::sin(x);
}

void require_positive(std::int64_t x, const char* name, const char* op) {
  if (x <= 0) throw ValidationError("out_of_range", std::string(op) + ": " + name + " must be positive");
}

void require_dihedral_pair(std::int64_t u, std::int64_t v, const char* op) {
  require_positive(u, "u", op);
  require_positive(v, "v", op);
  if (u % 2 == 0 || std::gcd(u, 4 * v) != 1) {
    throw ValidationError("not_coprime", std::string(op) + ": need u odd and gcd(u, 4v) = 1");
  }
}

Rational geometric_unchecked(std::int64_t b, std::int64_t d) {
  return frac_of(b, 3 * d) + frac_of(1, d) + frac_of(1, 6 * b * d) - 1;
}

}  // namespace

SpaceFormRep::SpaceFormRep(std::vector<MonomialUnitary> elements, std::size_t declared_order)
    : elements_(std::move(elements)) {
  if (elements_.size() != declared_order) {
    throw ValidationError("order_mismatch", "SpaceFormRep: " + std::to_string(elements_.size()) +
                                                " elements, declared " + std::to_string(declared_order));
  }
  std::unordered_set<MonomialUnitary> set(elements_.begin(), elements_.end());
  if (set.size() != elements_.size()) throw ValidationError("duplicate", "SpaceFormRep: repeated element");
  if (!set.count(MonomialUnitary::identity())) throw ValidationError("no_identity", "SpaceFormRep: identity missing");
  for (const auto& x : elements_) {
    for (const auto& y : elements_)
      if (!set.count(x * y)) throw ValidationError("not_closed", "SpaceFormRep: not closed under products");
    if (x.is_identity()) continue;
    auto [t1, t2] = turn_eigen_angles(x);
    if (t1.is_zero() || t2.is_zero()) {
      throw FixedPointError("SpaceFormRep: " + x.to_string() + " has a fixed point on S^3");
    }
  }
}

SpaceFormRep SpaceFormRep::generated_by(const std::vector<MonomialUnitary>& generators, std::size_t declared_order) {
  std::vector<MonomialUnitary> elems{MonomialUnitary::identity()};
  std::unordered_set<MonomialUnitary> seen(elems.begin(), elems.end());
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (const auto& s : generators) {
      auto y = elems[i] * s;
      if (seen.insert(y).second) elems.push_back(y);
    }
    if (elems.size() > declared_order) break;
  }
  return SpaceFormRep(std::move(elems), declared_order);
}

EtaValue eta_element(const MonomialUnitary& m) {
  if (!m.is_diagonal()) {
    auto [t1, t2] = turn_eigen_angles(m);
    if (t1.is_zero() || t2.is_zero()) throw FixedPointError("eta_element: " + m.to_string() + " has a fixed point");
    return {Rational(1), 1.0};
  }
  const Turn& t1 = m.a();
  const Turn& t2 = m.b();
  if (t1.is_zero() || t2.is_zero()) throw FixedPointError("eta_element: " + m.to_string() + " has a fixed point");
  if (t1 == Turn::half() || t2 == Turn::half()) return {Rational(0), 0.0};
  const Turn quarter(1, 4), three_quarters(3, 4);
  auto is_quarter = [&](const Turn& t) { return t == quarter || t == three_quarters; };
  if (is_quarter(t1) && is_quarter(t2)) {
    const Rational v = (t1 == t2) ? Rational(-1) : Rational(1);
    return {v, v.to_double()};
  }
  return {std::nullopt, static_cast<double>(-cot_turn(t1) * cot_turn(t2))};
}

EtaValue eta_space_form(const SpaceFormRep& rep) {
  Rational exact_sum;
  bool all_exact = true;
  long double numeric_sum = 0;
  for (const auto& g : rep.elements()) {
    if (g.is_identity()) continue;
    const EtaValue e = eta_element(g);
    numeric_sum += e.numeric;
    if (e.exact) exact_sum += *e.exact;
    else all_exact = false;
  }
  const auto n = static_cast<long long>(rep.order());
  EtaValue out;
  out.numeric = static_cast<double>(numeric_sum / static_cast<long double>(n));
  if (all_exact) out.exact = exact_sum / Rational(n);
  if (const auto& tag = rep.dihedral_tag()) {
    const Rational closed = eta_dihedral_closed(tag->first, tag->second);
    if (out.exact && *out.exact != closed) throw std::logic_error("eta_space_form: exact sum disagrees with closed form");
    if (std::abs(closed.to_double() - out.numeric) >= 1e-9) {
      throw std::logic_error("eta_space_form: cotangent sum disagrees with closed form");
    }
    out.exact = closed;
  }
  return out;
}

SpaceFormRep dihedral_representation(std::int64_t u, std::int64_t v) {
  require_dihedral_pair(u, v, "dihedral_representation");
  MonomialUnitary a, b;
  if (v % 2 == 0) {
    a = MonomialUnitary::diagonal(Turn(frac_of(2 * v + u, 2 * u * v)), Turn(frac_of(2 * v - u, 2 * u * v)));
    b = MonomialUnitary::antidiagonal(Turn::zero(), Turn::half());
  } else {
    a = MonomialUnitary::diagonal(Turn(1, v), Turn(-1, v));
    b = MonomialUnitary::antidiagonal(Turn::zero(), Turn(1, 2 * u));
  }
  auto rep = SpaceFormRep::generated_by({a, b}, static_cast<std::size_t>(4 * u * v));
  rep.set_dihedral_tag(u, v);
  return rep;
}

Rational eta_dihedral_closed(std::int64_t u, std::int64_t v) {
  require_dihedral_pair(u, v, "eta_dihedral_closed");
  return frac_of(1, 6 * u * v) + frac_of(v, 3 * u) - 4 * dedekind::s_sum(BigInt(v), BigInt(u));
}

Rational eta_case_term(std::int64_t m) {
  require_positive(m, "m", "eta_case_term");
  switch (m % 3) {
    case 0: return frac_of((m - 10) * (m + 1), 9 * m);
    case 1: return frac_of((m - 10) * (m - 1), 9 * m);
    default: return frac_of((m - 5) * (m - 2), 9 * m);
  }
}

Rational eta_case_formula(std::int64_t m, std::int64_t b) {
  require_positive(m, "m", "eta_case_formula");
  require_positive(b, "b", "eta_case_formula");
  if (m % 2 == 0 || std::gcd(m, 4 * b) != 1) {
    throw ValidationError("not_coprime", "eta_case_formula: need m odd and gcd(m, 4b) = 1");
  }
  if ((b + 3) % m != 0) throw ValidationError("not_divisible", "eta_case_formula: m must divide b + 3");
  return frac_of(1, 6 * m * b) + frac_of(b, 3 * m) + eta_case_term(m);
}

Rational eta_geometric(std::int64_t b, std::int64_t d) {
  require_positive(b, "b", "eta_geometric");
  require_positive(d, "d", "eta_geometric");
  if ((b + 3) % d != 0) throw ValidationError("not_divisible", "eta_geometric: d must divide b + 3");
  return geometric_unchecked(b, d);
}

ContradictionScan dihedral_contradiction_scan(std::int64_t max_m, std::int64_t max_b) {
  require_positive(max_m, "max_m", "dihedral_contradiction_scan");
  require_positive(max_b, "max_b", "dihedral_contradiction_scan");
  ContradictionScan out;
  for (std::int64_t m = 1; m <= max_m; ++m)
    if (frac_of(1, m) - 1 == eta_case_term(m)) out.family1.push_back(m);
  for (std::int64_t b = 1; b <= max_b; ++b) {
    const Rational lhs = eta_dihedral_closed(1, 2 * b);
    if (lhs == geometric_unchecked(b, 2)) out.family2.push_back(b);
    if (lhs == frac_of(1, 12 * b) + frac_of(b, 6)) out.family2_without_constant.push_back(b);
  }
  return out;
}

}  // namespace instanton
