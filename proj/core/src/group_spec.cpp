#include "instanton/group_spec.hpp"

#include <cctype>
#include <numeric>
#include <tuple>

#include "instanton/error.hpp"

namespace instanton::groups {

namespace {

[[noreturn]] void invalid(const std::string& what) { throw ValidationError("bad_group_spec", what); }

std::int64_t ipow(std::int64_t base, std::int64_t e) {
  std::int64_t r = 1;
  while (e-- > 0) r *= base;
  return r;
}

int family_rank(Family f) {
  switch (f) {
    case Family::trivial: return 0;
    case Family::cyclic: return 0;
    case Family::binary_dihedral: return 1;
    case Family::binary_tetrahedral: return 2;
    case Family::binary_octahedral: return 3;
    case Family::binary_icosahedral: return 4;
    case Family::tprime: return 5;
    case Family::dprime: return 6;
    case Family::product: return 7;
  }
  return 8;
}

}  // namespace

GroupSpec GroupSpec::trivial() { return GroupSpec(); }

GroupSpec GroupSpec::cyclic(std::int64_t m) {
  if (m < 1) invalid("cyclic group order must be >= 1");
  GroupSpec s;
  s.family_ = Family::cyclic;
  s.m_ = m;
  return s;
}

GroupSpec GroupSpec::binary_dihedral(std::int64_t b) {
  if (b < 1) invalid("binary dihedral group D*_{4b} needs b >= 1");
  GroupSpec s;
  s.family_ = Family::binary_dihedral;
  s.b_ = b;
  return s;
}

GroupSpec GroupSpec::binary_tetrahedral() {
  GroupSpec s;
  s.family_ = Family::binary_tetrahedral;
  return s;
}

GroupSpec GroupSpec::binary_octahedral() {
  GroupSpec s;
  s.family_ = Family::binary_octahedral;
  return s;
}

GroupSpec GroupSpec::binary_icosahedral() {
  GroupSpec s;
  s.family_ = Family::binary_icosahedral;
  return s;
}

GroupSpec GroupSpec::tprime(std::int64_t v) {
  if (v < 1) invalid("T'(v) needs v >= 1");
  if (v > 12) invalid("T'(v) with v > 12 is out of range");
  GroupSpec s;
  s.family_ = Family::tprime;
  s.v_ = v;
  return s;
}

GroupSpec GroupSpec::dprime(std::int64_t k, std::int64_t p) {
  if (k < 1) invalid("D'(k,p) needs k >= 1");
  if (k > 40) invalid("D'(k,p) with k > 40 is out of range");
  if (p <= 1 || p % 2 == 0) invalid("D'(k,p) needs p odd and > 1");
  GroupSpec s;
  s.family_ = Family::dprime;
  s.k_ = k;
  s.p_ = p;
  return s;
}

GroupSpec GroupSpec::product(std::int64_t m, const GroupSpec& base) {
  if (m < 2) invalid("product Z_m x G needs m >= 2");
  if (base.family_ == Family::product) invalid("product base must not itself be a product");
  if (std::gcd(m, base.order()) != 1) {
    invalid("Z" + std::to_string(m) + " x " + base.to_string() + ": orders are not coprime");
  }
  GroupSpec s;
  s.family_ = Family::product;
  s.m_ = m;
  s.base_ = std::make_shared<const GroupSpec>(base);
  return s;
}

std::int64_t GroupSpec::order() const {
  switch (family_) {
    case Family::trivial: return 1;
    case Family::cyclic: return m_;
    case Family::binary_dihedral: return 4 * b_;
    case Family::binary_tetrahedral: return 24;
    case Family::binary_octahedral: return 48;
    case Family::binary_icosahedral: return 120;
    case Family::tprime: return 8 * ipow(3, v_);
    case Family::dprime: return ipow(2, k_ + 2) * p_;
    case Family::product: return m_ * base_->order();
  }
  return 0;
}

bool GroupSpec::is_binary_polyhedral() const {
  return family_ == Family::binary_dihedral || family_ == Family::binary_tetrahedral ||
         family_ == Family::binary_octahedral || family_ == Family::binary_icosahedral;
}

std::string GroupSpec::to_string() const {
  switch (family_) {
    case Family::trivial: return "1";
    case Family::cyclic: return "Z" + std::to_string(m_);
    case Family::binary_dihedral: return "D*" + std::to_string(4 * b_);
    case Family::binary_tetrahedral: return "T*";
    case Family::binary_octahedral: return "O*";
    case Family::binary_icosahedral: return "I*";
    case Family::tprime: return "T'(v=" + std::to_string(v_) + ")";
    case Family::dprime: return "D'(k=" + std::to_string(k_) + ",p=" + std::to_string(p_) + ")";
    case Family::product: return "Z" + std::to_string(m_) + "x" + base_->to_string();
  }
  return "?";
}

std::strong_ordering operator<=>(const GroupSpec& a, const GroupSpec& b) {
  const GroupSpec& ab = a.family_ == Family::product ? *a.base_ : a;
  const GroupSpec& bb = b.family_ == Family::product ? *b.base_ : b;
  const std::int64_t am = a.family_ == Family::product ? a.m_ : 1;
  const std::int64_t bm = b.family_ == Family::product ? b.m_ : 1;
  // A bare cyclic group sorts as base "1" with cyclic factor m.
  const std::int64_t abo = ab.family_ == Family::cyclic ? 1 : ab.order();
  const std::int64_t bbo = bb.family_ == Family::cyclic ? 1 : bb.order();
  const std::int64_t amm = ab.family_ == Family::cyclic ? ab.m_ : am;
  const std::int64_t bmm = bb.family_ == Family::cyclic ? bb.m_ : bm;
  return std::tuple(family_rank(ab.family_), abo, amm, a.to_string()) <=>
         std::tuple(family_rank(bb.family_), bbo, bmm, b.to_string());
}

namespace {

struct Cursor {
  std::string s;
  std::size_t i = 0;

  bool eat(std::string_view token) {
    if (s.compare(i, token.size(), token) == 0) {
      i += token.size();
      return true;
    }
    return false;
  }
  std::int64_t number() {
    const std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (start == i) invalid("expected a number in group spec '" + s + "'");
    if (i - start > 15) invalid("number too large in group spec '" + s + "'");
    return std::stoll(s.substr(start, i - start));
  }
  bool done() const { return i == s.size(); }
};

GroupSpec parse_base(Cursor& c) {
  if (c.eat("1")) return GroupSpec::trivial();
  if (c.eat("T*")) return GroupSpec::binary_tetrahedral();
  if (c.eat("O*")) return GroupSpec::binary_octahedral();
  if (c.eat("I*")) return GroupSpec::binary_icosahedral();
  if (c.eat("D*")) {
    const std::int64_t order = c.number();
    if (order % 4 != 0) invalid("binary dihedral order must be a multiple of 4");
    return GroupSpec::binary_dihedral(order / 4);
  }
  if (c.eat("T'(V=")) {
    const std::int64_t v = c.number();
    if (!c.eat(")")) invalid("expected ')' in T' spec");
    return GroupSpec::tprime(v);
  }
  if (c.eat("D'(K=")) {
    const std::int64_t k = c.number();
    if (!c.eat(",P=")) invalid("expected ',p=' in D' spec");
    const std::int64_t p = c.number();
    if (!c.eat(")")) invalid("expected ')' in D' spec");
    return GroupSpec::dprime(k, p);
  }
  if (c.eat("Z")) return GroupSpec::cyclic(c.number());
  invalid("unrecognized group spec '" + c.s + "'");
}

}  // namespace

GroupSpec GroupSpec::parse(std::string_view text) {
  Cursor c;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) {
      c.s.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(ch))));
    }
  }
  GroupSpec first = parse_base(c);
  if (c.eat("X")) {
    if (first.family() != Family::cyclic) invalid("product spec must start with a cyclic factor Z<m>");
    GroupSpec base = parse_base(c);
    if (!c.done()) invalid("trailing characters in group spec '" + c.s + "'");
    return GroupSpec::product(first.m(), base);
  }
  if (!c.done()) invalid("trailing characters in group spec '" + c.s + "'");
  return first;
}

}  // namespace instanton::groups
