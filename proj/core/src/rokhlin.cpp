#include "instanton/rokhlin.hpp"

#include <cctype>
#include <charconv>
#include <numeric>

#include "instanton/error.hpp"

namespace instanton {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::int64_t parse_int(std::string_view s) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  std::int64_t v = 0;
  auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || end != s.data() + s.size()) {
    throw ValidationError("parse", "seifert: bad integer '" + std::string(s) + "'");
  }
  return v;
}

int sgn(const Rational& x) { return x.sign(); }

}  // namespace

SeifertInvariants SeifertInvariants::parse(std::string_view text) {
  const auto semi = text.find(';');
  if (semi == std::string_view::npos) throw ValidationError("parse", "seifert: expected 'b; a1/b1, ...'");
  SeifertInvariants s;
  s.b = parse_int(text.substr(0, semi));
  std::string_view rest = trim(text.substr(semi + 1));
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    const std::string_view item = trim(rest.substr(0, comma));
    const auto slash = item.find('/');
    if (slash == std::string_view::npos) throw ValidationError("parse", "seifert: expected a/b, got '" + std::string(item) + "'");
    const std::int64_t a = parse_int(item.substr(0, slash));
    if (a == 0) throw ValidationError("zero_multiplicity", "seifert: a_i must be nonzero");
    s.pairs.emplace_back(a, parse_int(item.substr(slash + 1)));
    if (comma == std::string_view::npos) break;
    rest = trim(rest.substr(comma + 1));
    if (rest.empty()) throw ValidationError("parse", "seifert: trailing comma");
  }
  return s;
}

std::string SeifertInvariants::to_string() const {
  std::string out = std::to_string(b) + ";";
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    out += (i ? ", " : " ") + std::to_string(pairs[i].first) + "/" + std::to_string(pairs[i].second);
  }
  return out;
}

std::int64_t c_function(std::int64_t a, std::int64_t b) {
  if (b == 0 || a == 0) throw ValidationError("zero_argument", "c_function: arguments must be nonzero");
  if (a % 2 == 0) throw ValidationError("even_first_argument", "c_function: first argument must be odd");
  if (std::gcd(a, b) != 1) throw ValidationError("not_coprime", "c_function: arguments must be coprime");
  std::int64_t sign = 1;
  if (a < 0) a = -a, sign = -sign;
  if (b < 0) b = -b, sign = -sign;
  std::int64_t acc = 0;
  while (b != 1) {
    // c(a, b) = c(a - 2kb, b), landing in (-b, b); then c(-a, b) = -c(a, b).
    a %= 2 * b;
    if (a > b) a -= 2 * b;
    if (a < 0) a = -a, sign = -sign, acc = -acc;
    // c(a, b) = c(a, b - a) + 1 while b - a > 0.
    const std::int64_t k = (b - 1) / a;
    acc += k;
    b -= k * a;
  }
  return sign * acc;
}

EulerNumber euler_number(const SeifertInvariants& s) {
  Rational sum;
  for (const auto& [a, bi] : s.pairs) {
    if (a == 0) throw ValidationError("zero_multiplicity", "euler_number: a_i must be nonzero");
    sum += Rational(BigInt(bi), BigInt(a));
  }
  return {sum, sum - Rational(s.b)};
}

Z2HomologyCheck is_z2_homology_sphere(const SeifertInvariants& s) {
  const EulerNumber e = euler_number(s);
  Rational product(1);
  for (const auto& p : s.pairs) product *= Rational(p.first);
  const Rational cert = product * e.general;
  if (!cert.is_integer()) {
    throw ValidationError("non_integral_certificate", "is_z2_homology_sphere: certificate " + cert.to_string() + " is not an integer");
  }
  return {cert.numerator() % 2 != 0, cert.numerator()};
}

std::optional<int> mod2_class(const Rational& x) {
  if (!x.is_integer()) return std::nullopt;
  return static_cast<int>(mod_positive(x.numerator(), 2));
}

RokhlinResult rokhlin_mu(const SeifertInvariants& s) {
  if (s.b != 0) throw ValidationError("nonzero_b", "rokhlin_mu: Seifert data must be normalized to b = 0");
  if (s.pairs.empty()) throw ValidationError("no_fibers", "rokhlin_mu: no exceptional fibers");
  int even = 0;
  for (const auto& [a, bi] : s.pairs) {
    if (a == 0) throw ValidationError("zero_multiplicity", "rokhlin_mu: a_i must be nonzero");
    even += a % 2 == 0;
    if ((a - bi) % 2 == 0) throw ValidationError("even_difference", "rokhlin_mu: every a_i - b_i must be odd");
  }
  if (even != 1) throw ValidationError("even_count", "rokhlin_mu: exactly one a_i must be even");
  if (!is_z2_homology_sphere(s).z2_homology_sphere) {
    throw ValidationError("not_z2_homology_sphere", "rokhlin_mu: certificate is even");
  }
  RokhlinResult r;
  std::int64_t total = 0;
  for (const auto& [a, bi] : s.pairs) {
    r.c_values.push_back(c_function(a - bi, a));
    total += r.c_values.back();
  }
  r.euler_sign = sgn(euler_number(s).general);
  r.mu = Rational(BigInt(total + r.euler_sign), BigInt(8));
  r.mod2 = mod2_class(r.mu);
  return r;
}

SpinBoundaryReport spin_boundary_check(const Rational& mu, const Rational& signature) {
  SpinBoundaryReport r{mu, signature, signature / Rational(8), false};
  const Rational half_diff = (mu - r.required) / Rational(2);
  r.contradiction = !half_diff.is_integer();
  return r;
}

TetrahedralReport tetrahedral_contradiction() {
  TetrahedralReport t;
  t.boundary = SeifertInvariants::parse("0; 3/4, 3/4, -2/3");
  t.cover_euler = Rational(7);  // E6 instanton
  t.degree = 7;                 // |Z_7|
  t.euler = t.cover_euler / Rational(t.degree);
  t.signature = Rational(1) - t.euler;
  t.spin = spin_boundary_check(rokhlin_mu(t.boundary).mu, t.signature);
  return t;
}

}  // namespace instanton
