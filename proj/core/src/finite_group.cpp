#include "instanton/finite_group.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "instanton/error.hpp"

namespace instanton::groups {

FiniteGroup::FiniteGroup(std::vector<std::string> labels, std::vector<Element> table)
    : n_(labels.size()), labels_(std::move(labels)), table_(std::move(table)) {
  if (n_ == 0) throw ValidationError("empty_group", "FiniteGroup: no elements");
  if (table_.size() != n_ * n_) throw ValidationError("bad_table", "FiniteGroup: table size mismatch");
  for (Element x : table_) {
    if (x >= n_) throw ValidationError("bad_table", "FiniteGroup: table entry out of range");
  }
  bool found = false;
  for (Element e = 0; e < n_ && !found; ++e) {
    bool ok = true;
    for (Element x = 0; x < n_ && ok; ++x) ok = mul(e, x) == x && mul(x, e) == x;
    if (ok) {
      identity_ = e;
      found = true;
    }
  }
  if (!found) throw ValidationError("bad_table", "FiniteGroup: no identity element");

  inverse_.assign(n_, 0);
  for (Element a = 0; a < n_; ++a) {
    bool ok = false;
    for (Element b = 0; b < n_; ++b) {
      if (mul(a, b) == identity_ && mul(b, a) == identity_) {
        inverse_[a] = b;
        ok = true;
        break;
      }
    }
    if (!ok) throw ValidationError("bad_table", "FiniteGroup: element without inverse");
  }

  orders_.assign(n_, 0);
  for (Element a = 0; a < n_; ++a) {
    unsigned k = 1;
    Element x = a;
    while (x != identity_) {
      x = mul(x, a);
      if (++k > n_) throw ValidationError("bad_table", "FiniteGroup: element of infinite order");
    }
    orders_[a] = k;
  }
}

Element FiniteGroup::power(Element a, std::int64_t k) const {
  k %= static_cast<std::int64_t>(orders_[a]);
  if (k < 0) k += orders_[a];
  Element result = identity_;
  Element base = a;
  while (k) {
    if (k & 1) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

ElementSet FiniteGroup::all_elements() const {
  ElementSet all(n_);
  for (Element i = 0; i < n_; ++i) all[i] = i;
  return all;
}

ElementSet FiniteGroup::center() const {
  ElementSet z;
  for (Element a = 0; a < n_; ++a) {
    bool central = true;
    for (Element b = 0; b < n_ && central; ++b) central = commutes(a, b);
    if (central) z.push_back(a);
  }
  return z;
}

ElementSet FiniteGroup::commutator_subgroup() const {
  std::vector<char> seen(n_, 0);
  std::vector<Element> gens;
  for (Element a = 0; a < n_; ++a) {
    for (Element b = 0; b < n_; ++b) {
      const Element c = commutator(a, b);
      if (!seen[c]) {
        seen[c] = 1;
        gens.push_back(c);
      }
    }
  }
  return generate(*this, gens);
}

bool FiniteGroup::is_associative() const {
  for (Element a = 0; a < n_; ++a)
    for (Element b = 0; b < n_; ++b) {
      const Element ab = mul(a, b);
      for (Element c = 0; c < n_; ++c) {
        if (mul(ab, c) != mul(a, mul(b, c))) return false;
      }
    }
  return true;
}

bool FiniteGroup::is_associative_sampled(std::size_t samples, std::uint64_t seed) const {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Element> pick(0, static_cast<Element>(n_ - 1));
  for (std::size_t i = 0; i < samples; ++i) {
    const Element a = pick(rng), b = pick(rng), c = pick(rng);
    if (mul(mul(a, b), c) != mul(a, mul(b, c))) return false;
  }
  return true;
}

ElementSet generate(const FiniteGroup& g, std::span<const Element> gens) {
  std::vector<char> in(g.size(), 0);
  std::vector<Element> members{g.identity()};
  in[g.identity()] = 1;
  for (std::size_t i = 0; i < members.size(); ++i) {
    const Element x = members[i];
    for (Element s : gens) {
      const Element y = g.mul(x, s);
      if (!in[y]) {
        in[y] = 1;
        members.push_back(y);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

bool is_subgroup(const FiniteGroup& g, const ElementSet& h) {
  if (h.empty()) return false;
  std::vector<char> in(g.size(), 0);
  for (Element x : h) in[x] = 1;
  if (!in[g.identity()]) return false;
  for (Element a : h)
    for (Element b : h)
      if (!in[g.mul(a, g.inverse(b))]) return false;
  return true;
}

bool is_normal(const FiniteGroup& g, const ElementSet& h) {
  std::vector<char> in(g.size(), 0);
  for (Element x : h) in[x] = 1;
  for (Element by = 0; by < g.size(); ++by)
    for (Element x : h)
      if (!in[g.conjugate(x, by)]) return false;
  return true;
}

FiniteGroup restrict_to(const FiniteGroup& g, const ElementSet& h) {
  std::vector<Element> index(g.size(), 0);
  std::vector<std::string> labels;
  labels.reserve(h.size());
  for (std::size_t i = 0; i < h.size(); ++i) {
    index[h[i]] = static_cast<Element>(i);
    labels.push_back(g.label(h[i]));
  }
  std::vector<Element> table(h.size() * h.size());
  for (std::size_t i = 0; i < h.size(); ++i)
    for (std::size_t j = 0; j < h.size(); ++j) table[i * h.size() + j] = index[g.mul(h[i], h[j])];
  return FiniteGroup(std::move(labels), std::move(table));
}

ElementSet centralizer(const FiniteGroup& g, Element x, const ElementSet& domain) {
  ElementSet c;
  for (Element y : domain)
    if (g.commutes(x, y)) c.push_back(y);
  return c;
}

namespace {

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> ps;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      ps.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) ps.push_back(n);
  return ps;
}

// Invariant factors of the abelian quotient G/N, read off from the sizes of
// its p^j-torsion subgroups.
std::vector<std::uint64_t> abelian_quotient_invariants(const FiniteGroup& g, const ElementSet& normal) {
  std::vector<char> in_n(g.size(), 0);
  for (Element x : normal) in_n[x] = 1;
  const std::uint64_t q = g.size() / normal.size();

  // elementary[p] = list of exponents e (one per cyclic factor p^e).
  std::vector<std::vector<std::uint64_t>> per_prime_powers;
  for (std::uint64_t p : prime_factors(q)) {
    std::uint64_t p_part = 1;
    for (std::uint64_t t = q; t % p == 0; t /= p) p_part *= p;
    // rank[j] = log_p |Q[p^j]|
    std::vector<unsigned> rank{0};
    std::uint64_t pj = 1;
    while (true) {
      pj *= p;
      std::size_t count = 0;
      for (Element x = 0; x < g.size(); ++x)
        if (in_n[g.power(x, static_cast<std::int64_t>(pj))]) ++count;
      std::uint64_t torsion = count / normal.size();
      unsigned r = 0;
      while (torsion > 1) {
        torsion /= p;
        ++r;
      }
      rank.push_back(r);
      std::uint64_t full = 1;
      for (unsigned i = 0; i < r; ++i) full *= p;
      if (full == p_part) break;
    }
    // factors of order >= p^j: rank[j] - rank[j-1]
    std::vector<std::uint64_t> powers;
    for (std::size_t j = 1; j < rank.size(); ++j) {
      const unsigned at_least_j = rank[j] - rank[j - 1];
      const unsigned at_least_next = j + 1 < rank.size() ? rank[j + 1] - rank[j] : 0;
      std::uint64_t pe = 1;
      for (std::size_t i = 0; i < j; ++i) pe *= p;
      for (unsigned c = at_least_next; c < at_least_j; ++c) powers.push_back(pe);
    }
    std::sort(powers.rbegin(), powers.rend());
    per_prime_powers.push_back(std::move(powers));
  }
  std::size_t width = 0;
  for (const auto& v : per_prime_powers) width = std::max(width, v.size());
  std::vector<std::uint64_t> invariants(width, 1);
  for (const auto& v : per_prime_powers)
    for (std::size_t i = 0; i < v.size(); ++i) invariants[i] *= v[i];
  std::sort(invariants.begin(), invariants.end());
  return invariants;
}

}  // namespace

GroupProfile group_profile(const FiniteGroup& g) {
  GroupProfile p;
  p.order = g.size();
  p.center_order = g.center().size();
  for (Element a = 0; a < g.size(); ++a) {
    ++p.element_order_histogram[g.order_of(a)];
    if (g.order_of(a) == 2) ++p.involution_count;
  }
  p.abelianization_invariants = abelian_quotient_invariants(g, g.commutator_subgroup());
  return p;
}

}  // namespace instanton::groups
