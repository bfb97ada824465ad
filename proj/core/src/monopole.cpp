#include "instanton/monopole.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "instanton/error.hpp"

namespace instanton {

namespace {

const std::array<Vec3, 3> kBasis{Vec3{1, 0, 0}, Vec3{0, 1, 0}, Vec3{0, 0, 1}};

bool parallel(const Vec3& a, const Vec3& b) { return is_zero(cross(a, b)); }

// Direction of the rotation axis of a non-identity rotation.
Vec3 rotation_axis(const RationalMatrix3& r) {
  const Vec3 w{r(2, 1) - r(1, 2), r(0, 2) - r(2, 0), r(1, 0) - r(0, 1)};
  if (!is_zero(w)) return canonical_axis(primitive_direction(w));
  // Half-turn: R + I = 2 a a^T.
  for (int c = 0; c < 3; ++c) {
    Vec3 col{r(0, c), r(1, c), r(2, c)};
    col[c] += 1;
    if (!is_zero(col)) return canonical_axis(primitive_direction(col));
  }
  throw std::logic_error("rotation_axis: identity has no axis");
}

// 2 sin(theta) relative to the canonical axis, up to a positive factor.
Rational sine_sign(const RationalMatrix3& r, const Vec3& axis) {
  const Vec3 w{r(2, 1) - r(1, 2), r(0, 2) - r(2, 0), r(1, 0) - r(0, 1)};
  return dot(w, axis);
}

bool maps_set_to_itself(const RationalMatrix3& m, const MonopoleConfig& f) {
  return std::all_of(f.points().begin(), f.points().end(), [&](const Vec3& p) { return f.contains(m * p); });
}

bool axis_is_free(const Vec3& axis, const MonopoleConfig& f) {
  return std::none_of(f.points().begin(), f.points().end(), [&](const Vec3& p) { return parallel(p, axis); });
}

std::vector<RationalMatrix3> rotation_group(const MonopoleConfig& f, const Vec3& pa, const Vec3& pb) {
  const auto& pts = f.points();
  const auto basis = RationalMatrix3::from_columns(pa, pb, cross(pa, pb));
  const auto basis_inv = *basis.inverse();
  const Rational na = dot(pa, pa), nb = dot(pb, pb), gab = dot(pa, pb);
  std::vector<RationalMatrix3> out;
  std::set<std::string> seen;
  for (const Vec3& qa : pts) {
    if (dot(qa, qa) != na) continue;
    for (const Vec3& qb : pts) {
      if (dot(qb, qb) != nb || dot(qa, qb) != gab) continue;
      const auto m = RationalMatrix3::from_columns(qa, qb, cross(qa, qb)) * basis_inv;
      if (!m.is_rotation() || !maps_set_to_itself(m, f)) continue;
      if (seen.insert(m.to_string()).second) out.push_back(m);
    }
  }
  return out;
}

bool symmetry_less(const CyclicSymmetry& a, const CyclicSymmetry& b) {
  if (a.order != b.order) return a.order > b.order;
  if (a.axis != b.axis) return a.axis < b.axis;
  return static_cast<int>(a.kind) < static_cast<int>(b.kind);
}

}  // namespace

MonopoleConfig::MonopoleConfig(std::vector<Vec3> points) : points_(std::move(points)) {
  std::set<Vec3> distinct(points_.begin(), points_.end());
  if (distinct.size() != points_.size()) throw ValidationError("duplicate_point", "monopole points must be distinct");
}

Vec3 MonopoleConfig::center_of_mass() const {
  if (points_.empty()) throw ValidationError("empty", "monopole configuration is empty");
  Vec3 sum{};
  for (const auto& p : points_) sum = sum + p;
  return Rational(BigInt(1), BigInt(points_.size())) * sum;
}

bool MonopoleConfig::contains(const Vec3& p) const {
  return std::find(points_.begin(), points_.end(), p) != points_.end();
}

MonopoleConfig recenter(const MonopoleConfig& f) {
  const Vec3 c = f.center_of_mass();
  std::vector<Vec3> pts;
  pts.reserve(f.size());
  for (const auto& p : f.points()) pts.push_back(p - c);
  return MonopoleConfig(std::move(pts));
}

double potential(const MonopoleConfig& f, const Vec3& x) {
  double v = 0;
  for (const auto& p : f.points()) {
    const Vec3 d = x - p;
    if (is_zero(d)) throw ValidationError("at_monopole", "potential: evaluation point is a monopole");
    v += 1.0 / std::sqrt(dot(d, d).to_double());
  }
  return v / 2;
}

std::string to_string(SymmetryKind k) {
  switch (k) {
    case SymmetryKind::discrete: return "discrete";
    case SymmetryKind::about_line: return "about_line";
    case SymmetryKind::perpendicular: return "perpendicular";
    case SymmetryKind::any_axis: return "any_axis";
  }
  return "?";
}

std::vector<CyclicSymmetry> symmetry_rotations(const MonopoleConfig& f) {
  if (f.size() == 0) throw ValidationError("empty", "symmetry_rotations: empty configuration");
  if (!is_zero(f.center_of_mass())) throw ValidationError("not_centered", "symmetry_rotations: configuration must be centered");
  const auto& pts = f.points();

  const Vec3* pa = nullptr;
  const Vec3* pb = nullptr;
  for (const auto& p : pts) {
    if (is_zero(p)) continue;
    if (!pa) pa = &p;
    else if (!parallel(*pa, p)) {
      pb = &p;
      break;
    }
  }

  std::vector<CyclicSymmetry> out;
  if (!pa) {
    CyclicSymmetry s;
    s.kind = SymmetryKind::any_axis;
    s.count = "continuum";
    out.push_back(s);
    return out;
  }
  if (!pb) {
    const Vec3 u = canonical_axis(primitive_direction(*pa));
    CyclicSymmetry line;
    line.kind = SymmetryKind::about_line;
    line.axis = u;
    line.count = "continuum";
    out.push_back(line);
    const bool symmetric = std::all_of(pts.begin(), pts.end(), [&](const Vec3& p) { return f.contains(Rational(-1) * p); });
    if (symmetric) {
      CyclicSymmetry perp;
      perp.kind = SymmetryKind::perpendicular;
      perp.order = 2;
      auto e = std::find_if(kBasis.begin(), kBasis.end(), [&](const Vec3& v) { return dot(v, u).is_zero(); });
      perp.axis = e != kBasis.end() ? *e : canonical_axis(primitive_direction(cross(kBasis[0], u)));
      perp.generator = RationalMatrix3::half_turn(*perp.axis);
      perp.free = axis_is_free(*perp.axis, f);
      perp.count = "continuum";
      out.push_back(perp);
    }
    std::sort(out.begin(), out.end(), symmetry_less);
    return out;
  }

  const auto group = rotation_group(f, *pa, *pb);
  const auto id = RationalMatrix3::identity();
  std::set<std::set<std::string>> seen;
  for (const auto& g : group) {
    if (g == id) continue;
    std::vector<RationalMatrix3> cyc;
    std::set<std::string> key;
    for (RationalMatrix3 x = g; !(x == id); x = x * g) {
      cyc.push_back(x);
      key.insert(x.to_string());
    }
    if (!seen.insert(key).second) continue;
    CyclicSymmetry s;
    s.order = static_cast<std::int64_t>(cyc.size()) + 1;
    s.axis = rotation_axis(g);
    const RationalMatrix3* best = nullptr;
    for (const auto& x : cyc) {
      if (s.order > 2 && sine_sign(x, *s.axis).sign() <= 0) continue;
      if (!best || x.trace() > best->trace()) best = &x;
    }
    s.generator = *best;
    s.free = axis_is_free(*s.axis, f);
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end(), symmetry_less);
  return out;
}

std::vector<CyclicSymmetry> free_cyclic_subgroups(const MonopoleConfig& f) {
  auto all = symmetry_rotations(f);
  std::vector<CyclicSymmetry> out;
  std::copy_if(all.begin(), all.end(), std::back_inserter(out), [](const CyclicSymmetry& s) { return s.free; });
  return out;
}

std::vector<QuotientDescriptor> classify_quotients(const MonopoleConfig& f) {
  const MonopoleConfig centered = recenter(f);
  const auto n = static_cast<std::int64_t>(centered.size());
  const auto cover = catalog_lookup(DynkinType::A, n);
  auto describe = [&](std::optional<CyclicSymmetry> s) {
    QuotientDescriptor q;
    q.invariants = quotient_invariants(cover, s ? s->order : 1);
    if (s) q.kahler_axis = s->axis;
    q.symmetry = std::move(s);
    q.corollary_c = q.invariants.b2.is_zero();
    q.flat = q.invariants.asd_energy.is_zero();
    return q;
  };
  std::vector<QuotientDescriptor> out{describe(std::nullopt)};
  for (auto& s : free_cyclic_subgroups(centered)) {
    if (n % s.order != 0) throw std::logic_error("classify_quotients: free subgroup order does not divide |F|");
    out.push_back(describe(std::move(s)));
  }
  return out;
}

}  // namespace instanton
