#include "instanton/group_catalog.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <unordered_map>

#include "instanton/error.hpp"
#include "instanton/monomial.hpp"
#include "instanton/quaternion.hpp"

namespace instanton::groups {

namespace {

// Closes `seeds` under multiplication and tabulates the result.
template <class T, class Mul>
FiniteGroup close_and_tabulate(const std::vector<T>& seeds, Mul mul, std::size_t expected) {
  std::vector<T> elems;
  std::unordered_map<T, Element> index;
  auto add = [&](const T& x) {
    if (index.emplace(x, static_cast<Element>(elems.size())).second) elems.push_back(x);
  };
  for (const auto& s : seeds) add(s);
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (std::size_t j = 0; j < seeds.size(); ++j) {
      add(mul(elems[i], seeds[j]));
      if (elems.size() > expected) {
        throw std::logic_error("group closure exceeded expected order " + std::to_string(expected));
      }
    }
  }
  if (elems.size() != expected) {
    throw std::logic_error("group closure has " + std::to_string(elems.size()) + " elements, expected " +
                           std::to_string(expected));
  }
  const std::size_t n = elems.size();
  std::vector<Element> table(n * n);
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t a = 0; a < n; ++a) {
    labels.push_back(elems[a].to_string());
    for (std::size_t b = 0; b < n; ++b) table[a * n + b] = index.at(mul(elems[a], elems[b]));
  }
  return FiniteGroup(std::move(labels), std::move(table));
}

FiniteGroup cyclic_group(std::int64_t m) {
  const auto n = static_cast<std::size_t>(m);
  std::vector<std::string> labels;
  std::vector<Element> table(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    labels.push_back(Turn(static_cast<long long>(a), m).to_string());
    for (std::size_t b = 0; b < n; ++b) table[a * n + b] = static_cast<Element>((a + b) % n);
  }
  return FiniteGroup(std::move(labels), std::move(table));
}

FiniteGroup binary_dihedral_group(std::int64_t b) {
  const Turn step(1, 2 * b);
  const auto z = MonomialUnitary::diagonal(step, -step);
  const auto w = MonomialUnitary::antidiagonal(Turn::zero(), Turn::half());
  return close_and_tabulate(std::vector<MonomialUnitary>{MonomialUnitary::identity(), z, w},
                            [](const MonomialUnitary& x, const MonomialUnitary& y) { return x * y; },
                            static_cast<std::size_t>(4 * b));
}

template <class S>
void push_signed_permutations(std::vector<Quaternion<S>>& out, const std::array<S, 4>& magnitudes,
                              bool even_only) {
  std::array<int, 4> perm{0, 1, 2, 3};
  do {
    int inversions = 0;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) inversions += perm[i] > perm[j];
    if (even_only && inversions % 2) continue;
    for (int signs = 0; signs < 16; ++signs) {
      std::array<S, 4> c;
      bool redundant = false;
      for (int i = 0; i < 4; ++i) {
        c[i] = magnitudes[perm[i]];
        if (signs >> i & 1) {
          if (c[i].is_zero()) redundant = true;
          c[i] = -c[i];
        }
      }
      if (!redundant) out.emplace_back(c[0], c[1], c[2], c[3]);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
}

template <class S>
std::vector<Quaternion<S>> hurwitz_units() {
  std::vector<Quaternion<S>> q;
  const S one(1), zero(0), half(Rational(BigInt(1), BigInt(2)));
  push_signed_permutations<S>(q, {one, zero, zero, zero}, false);
  push_signed_permutations<S>(q, {half, half, half, half}, false);
  std::sort(q.begin(), q.end(), [](const auto& a, const auto& b) { return a.to_string() < b.to_string(); });
  q.erase(std::unique(q.begin(), q.end()), q.end());
  return q;
}

template <class S>
FiniteGroup quaternion_group(std::vector<Quaternion<S>> elems, std::size_t expected) {
  // Deduplicate permutations that coincide because of repeated magnitudes.
  std::vector<Quaternion<S>> unique;
  std::unordered_map<Quaternion<S>, int> seen;
  for (auto& q : elems) {
    if (!q.is_unit()) throw std::logic_error("non-unit quaternion in group construction");
    if (seen.emplace(q, 0).second) unique.push_back(std::move(q));
  }
  // Put 1 first so that labels read naturally.
  auto it = std::find(unique.begin(), unique.end(), Quaternion<S>::one());
  std::rotate(unique.begin(), it, it + 1);
  return close_and_tabulate(unique, [](const auto& x, const auto& y) { return x * y; }, expected);
}

FiniteGroup binary_tetrahedral_group() { return quaternion_group(hurwitz_units<Rational>(), 24); }

FiniteGroup binary_octahedral_group() {
  auto q = hurwitz_units<Sqrt2>();
  const Sqrt2 r(Rational(0), Rational(BigInt(1), BigInt(2)));  // 1/sqrt2
  push_signed_permutations<Sqrt2>(q, {r, r, Sqrt2(0), Sqrt2(0)}, false);
  return quaternion_group(std::move(q), 48);
}

FiniteGroup binary_icosahedral_group() {
  auto q = hurwitz_units<Sqrt5>();
  const Rational quarter(BigInt(1), BigInt(4));
  const Sqrt5 half_phi(quarter, quarter);                 // (1 + sqrt5)/4
  const Sqrt5 half_phi_inv(-quarter, quarter);            // (sqrt5 - 1)/4
  const Sqrt5 half(Rational(BigInt(1), BigInt(2)));
  push_signed_permutations<Sqrt5>(q, {half_phi, half, half_phi_inv, Sqrt5(0)}, true);
  return quaternion_group(std::move(q), 120);
}

// Q8 = {+-1, +-i, +-j, +-k} in the fixed order used by T'(v).
const std::vector<QuaternionUnit>& q8_units() {
  static const std::vector<QuaternionUnit> units = [] {
    std::vector<QuaternionUnit> u;
    for (int axis = 0; axis < 4; ++axis)
      for (int s : {1, -1}) {
        std::array<Rational, 4> c{};
        c[axis] = s;
        u.emplace_back(c[0], c[1], c[2], c[3]);
      }
    return u;
  }();
  return units;
}

FiniteGroup tprime_group(std::int64_t v) {
  const auto& q8 = q8_units();
  auto q8_index = [&](const QuaternionUnit& q) {
    return static_cast<std::size_t>(std::find(q8.begin(), q8.end(), q) - q8.begin());
  };
  // sigma: conjugation by x, p = i -> q = j -> pq = k -> i.
  auto sigma = [](const QuaternionUnit& q) { return QuaternionUnit(q[0], q[3], q[1], q[2]); };
  std::array<std::array<std::size_t, 8>, 3> sigma_pow{};
  for (std::size_t a = 0; a < 8; ++a) {
    QuaternionUnit x = q8[a];
    for (int e = 0; e < 3; ++e) {
      sigma_pow[e][a] = q8_index(x);
      x = sigma(x);
    }
    if (x != q8[a]) throw std::logic_error("T'(v): Q8 automorphism does not have order 3");
  }
  if (sigma(q8[2]) == q8[2]) throw std::logic_error("T'(v): Q8 automorphism is trivial");
  for (std::size_t a = 0; a < 8; ++a)
    for (std::size_t b = 0; b < 8; ++b)
      if (sigma(q8[a] * q8[b]) != sigma(q8[a]) * sigma(q8[b]))
        throw std::logic_error("T'(v): Q8 map is not a homomorphism");

  std::int64_t three_v = 1;
  for (std::int64_t i = 0; i < v; ++i) three_v *= 3;
  const auto n = static_cast<std::size_t>(8 * three_v);
  auto idx = [](std::int64_t e, std::size_t a) { return static_cast<std::size_t>(e) * 8 + a; };
  std::vector<std::string> labels(n);
  std::vector<Element> table(n * n);
  for (std::int64_t e = 0; e < three_v; ++e)
    for (std::size_t a = 0; a < 8; ++a) {
      labels[idx(e, a)] = "x^" + std::to_string(e) + "*" + q8[a].to_string();
      for (std::int64_t f = 0; f < three_v; ++f)
        for (std::size_t b = 0; b < 8; ++b) {
          // x^e a x^f b = x^(e+f) sigma^(-f)(a) b
          const std::size_t twisted = sigma_pow[static_cast<std::size_t>((3 - f % 3) % 3)][a];
          const std::size_t prod = q8_index(q8[twisted] * q8[b]);
          table[idx(e, a) * n + idx(f, b)] = static_cast<Element>(idx((e + f) % three_v, prod));
        }
    }
  return FiniteGroup(std::move(labels), std::move(table));
}

FiniteGroup dprime_group(std::int64_t k, std::int64_t p) {
  const std::int64_t two_k2 = std::int64_t{1} << (k + 2);
  const auto n = static_cast<std::size_t>(two_k2 * p);
  auto idx = [p](std::int64_t c, std::int64_t d) { return static_cast<std::size_t>(c * p + d); };
  std::vector<std::string> labels(n);
  std::vector<Element> table(n * n);
  for (std::int64_t c = 0; c < two_k2; ++c)
    for (std::int64_t d = 0; d < p; ++d) {
      labels[idx(c, d)] = "x^" + std::to_string(c) + "*y^" + std::to_string(d);
      for (std::int64_t c2 = 0; c2 < two_k2; ++c2)
        for (std::int64_t d2 = 0; d2 < p; ++d2) {
          // x^c y^d x^c' y^d' = x^(c+c') y^(d (-1)^c' + d')
          const std::int64_t dd = ((c2 % 2 ? -d : d) + d2 + p) % p;
          table[idx(c, d) * n + idx(c2, d2)] = static_cast<Element>(idx((c + c2) % two_k2, dd));
        }
    }
  return FiniteGroup(std::move(labels), std::move(table));
}

FiniteGroup direct_product_with_cyclic(std::int64_t m, const FiniteGroup& base) {
  const std::size_t nb = base.size();
  const auto mm = static_cast<std::size_t>(m);
  const std::size_t n = mm * nb;
  std::vector<std::string> labels(n);
  std::vector<Element> table(n * n);
  for (std::size_t i = 0; i < mm; ++i)
    for (Element a = 0; a < nb; ++a) {
      labels[i * nb + a] = "(" + Turn(static_cast<long long>(i), m).to_string() + "," + base.label(a) + ")";
      for (std::size_t j = 0; j < mm; ++j)
        for (Element b = 0; b < nb; ++b)
          table[(i * nb + a) * n + j * nb + b] = static_cast<Element>(((i + j) % mm) * nb + base.mul(a, b));
    }
  return FiniteGroup(std::move(labels), std::move(table));
}

}  // namespace

FiniteGroup construct_group(const GroupSpec& spec) {
  if (spec.order() > 20000) {
    throw ValidationError("too_large", "construct_group: " + spec.to_string() + " exceeds the supported order");
  }
  FiniteGroup g = [&] {
    switch (spec.family()) {
      case Family::trivial: return cyclic_group(1);
      case Family::cyclic: return cyclic_group(spec.m());
      case Family::binary_dihedral: return binary_dihedral_group(spec.b());
      case Family::binary_tetrahedral: return binary_tetrahedral_group();
      case Family::binary_octahedral: return binary_octahedral_group();
      case Family::binary_icosahedral: return binary_icosahedral_group();
      case Family::tprime: return tprime_group(spec.v());
      case Family::dprime: return dprime_group(spec.k(), spec.p());
      case Family::product: return direct_product_with_cyclic(spec.m(), construct_group(spec.base()));
    }
    throw std::logic_error("construct_group: unknown family");
  }();
  if (static_cast<std::int64_t>(g.size()) != spec.order()) {
    throw std::logic_error("construct_group: " + spec.to_string() + " built with wrong order");
  }
  return g;
}

namespace {

Word pow_word(int gen, std::int64_t e) { return Word(static_cast<std::size_t>(e), gen); }

Word concat(std::initializer_list<Word> parts) {
  Word w;
  for (const auto& p : parts) w.insert(w.end(), p.begin(), p.end());
  return w;
}

std::int64_t ipow(std::int64_t b, std::int64_t e) {
  std::int64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

// <s, t | s^3 = t^n = (st)^2>, the binary polyhedral group <2,3,n>.
Presentation polyhedral(int n) {
  Presentation p;
  p.generators = 2;
  p.relations = {{pow_word(1, 3), pow_word(2, n)}, {pow_word(1, 3), Word{1, 2, 1, 2}}};
  p.generator_orders = {6, static_cast<unsigned>(2 * n)};
  return p;
}

}  // namespace

std::optional<Presentation> presentation_of(const GroupSpec& spec) {
  Presentation p;
  switch (spec.family()) {
    case Family::trivial:
      return p;
    case Family::cyclic:
      p.generators = 1;
      p.relations = {{pow_word(1, spec.m()), Word{}}};
      p.generator_orders = {static_cast<unsigned>(spec.m())};
      return p;
    case Family::binary_dihedral: {
      // <z, w | z^2b = 1, z^b = w^2, w z w^-1 = z^-1>
      const std::int64_t b = spec.b();
      p.generators = 2;
      p.relations = {{pow_word(1, 2 * b), Word{}}, {pow_word(1, b), Word{2, 2}}, {Word{2, 1, -2}, Word{-1}}};
      p.generator_orders = {static_cast<unsigned>(2 * b), 4};
      return p;
    }
    case Family::binary_tetrahedral: return polyhedral(3);
    case Family::binary_octahedral: return polyhedral(4);
    case Family::binary_icosahedral: return polyhedral(5);
    case Family::dprime: {
      // <x, y | x^(2^(k+2)) = y^p = 1, y x = x y^-1>
      const std::int64_t two = std::int64_t{1} << (spec.k() + 2);
      p.generators = 2;
      p.relations = {{pow_word(1, two), Word{}}, {pow_word(2, spec.p()), Word{}}, {Word{2, 1}, Word{1, -2}}};
      p.generator_orders = {static_cast<unsigned>(two), static_cast<unsigned>(spec.p())};
      return p;
    }
    case Family::tprime: {
      // <x, p, q | x^(3^v) = p^4 = 1, p^2 = q^2, x q x^-1 = p q, x p x^-1 = q,
      //  p q p^-1 = q^-1>, with q eliminated as x p x^-1.
      const std::int64_t three_v = ipow(3, spec.v());
      const Word q{1, 2, -1};
      const Word q_inv{1, -2, -1};
      p.generators = 2;
      p.relations = {{pow_word(1, three_v), Word{}},
                     {pow_word(2, 4), Word{}},
                     {Word{2, 2}, concat({q, q})},
                     {concat({Word{1}, q, Word{-1}}), concat({Word{2}, q})},
                     {concat({Word{2}, q, Word{-2}}), q_inv}};
      p.generator_orders = {static_cast<unsigned>(three_v), 4};
      return p;
    }
    case Family::product:
      return std::nullopt;
  }
  return std::nullopt;
}

Element evaluate(const FiniteGroup& g, const Word& w, std::span<const Element> images) {
  Element x = g.identity();
  for (int letter : w) {
    const Element s = images[static_cast<std::size_t>(std::abs(letter) - 1)];
    x = g.mul(x, letter > 0 ? s : g.inverse(s));
  }
  return x;
}

bool satisfies(const FiniteGroup& g, const Presentation& pres, std::span<const Element> images) {
  if (images.size() != static_cast<std::size_t>(pres.generators)) return false;
  return std::all_of(pres.relations.begin(), pres.relations.end(), [&](const auto& rel) {
    return evaluate(g, rel.first, images) == evaluate(g, rel.second, images);
  });
}

std::optional<std::vector<Element>> find_witness(const FiniteGroup& g, const ElementSet& domain,
                                                 const GroupSpec& spec) {
  const auto target = static_cast<std::size_t>(spec.order());
  if (target > domain.size()) return std::nullopt;

  if (spec.family() == Family::product) {
    const auto m = static_cast<unsigned>(spec.m());
    for (Element c : domain) {
      if (g.order_of(c) != m) continue;
      auto inner = find_witness(g, centralizer(g, c, domain), spec.base());
      if (!inner) continue;
      std::vector<Element> w{c};
      w.insert(w.end(), inner->begin(), inner->end());
      if (generate(g, w).size() == target) return w;
    }
    return std::nullopt;
  }

  const Presentation pres = *presentation_of(spec);
  if (pres.generators == 0) {
    if (target == 1) return std::vector<Element>{};
    return std::nullopt;
  }
  if (pres.generators == 1) {
    for (Element x : domain) {
      if (g.order_of(x) != pres.generator_orders[0]) continue;
      const std::array<Element, 1> img{x};
      if (satisfies(g, pres, img) && generate(g, img).size() == target) return std::vector<Element>{x};
    }
    return std::nullopt;
  }
  std::vector<Element> first, second;
  for (Element x : domain) {
    if (g.order_of(x) == pres.generator_orders[0]) first.push_back(x);
    if (g.order_of(x) == pres.generator_orders[1]) second.push_back(x);
  }
  for (Element x : first)
    for (Element y : second) {
      const std::array<Element, 2> img{x, y};
      if (satisfies(g, pres, img) && generate(g, img).size() == target) return std::vector<Element>{x, y};
    }
  return std::nullopt;
}

}  // namespace instanton::groups
