#include "instanton/subgroups.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>

#include "instanton/error.hpp"
#include "instanton/space_forms.hpp"

namespace instanton::groups {

namespace {

bool by_size_then_content(const ElementSet& a, const ElementSet& b) {
  return a.size() != b.size() ? a.size() < b.size() : a < b;
}

bool is_power_of_two(std::size_t n) { return n && (n & (n - 1)) == 0; }

const GroupProfile& catalog_profile(const GroupSpec& spec) {
  static std::mutex mu;
  static std::map<std::string, GroupProfile> cache;
  const std::string key = spec.to_string();
  std::lock_guard lock(mu);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, group_profile(construct_group(spec))).first;
  return it->second;
}

}  // namespace

std::vector<ElementSet> cyclic_subgroups(const FiniteGroup& g) {
  std::set<ElementSet> seen;
  for (Element x = 0; x < g.size(); ++x) {
    const std::array<Element, 1> gen{x};
    seen.insert(generate(g, gen));
  }
  std::vector<ElementSet> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), by_size_then_content);
  return out;
}

std::vector<ElementSet> all_subgroups(const FiniteGroup& g) {
  const auto cyclic = cyclic_subgroups(g);
  // Generator of each cyclic subgroup: its least element of full order.
  std::vector<Element> cyclic_gen;
  for (const auto& c : cyclic) {
    for (Element x : c)
      if (g.order_of(x) == c.size()) {
        cyclic_gen.push_back(x);
        break;
      }
  }
  std::map<ElementSet, std::vector<Element>> found;
  std::vector<const ElementSet*> frontier;
  for (std::size_t i = 0; i < cyclic.size(); ++i) {
    auto [it, inserted] = found.emplace(cyclic[i], std::vector<Element>{cyclic_gen[i]});
    if (inserted) frontier.push_back(&it->first);
  }
  while (!frontier.empty()) {
    std::vector<const ElementSet*> next;
    for (const ElementSet* h : frontier) {
      const std::vector<Element> gens = found.at(*h);
      for (std::size_t i = 0; i < cyclic.size(); ++i) {
        if (std::binary_search(h->begin(), h->end(), cyclic_gen[i])) continue;
        std::vector<Element> joined = gens;
        joined.push_back(cyclic_gen[i]);
        ElementSet j = generate(g, joined);
        if (found.count(j)) continue;
        auto [it, inserted] = found.emplace(std::move(j), std::move(joined));
        next.push_back(&it->first);
      }
    }
    frontier = std::move(next);
  }
  std::vector<ElementSet> out;
  out.reserve(found.size());
  for (auto& [h, gens] : found) out.push_back(h);
  std::sort(out.begin(), out.end(), by_size_then_content);
  return out;
}

std::optional<GroupSpec> identify(const FiniteGroup& g, const ElementSet& h) {
  const FiniteGroup sub = restrict_to(g, h);
  const GroupProfile profile = group_profile(sub);
  for (const GroupSpec& spec : space_form_groups_of_order(static_cast<std::int64_t>(h.size()))) {
    if (catalog_profile(spec) != profile) continue;
    if (find_witness(g, h, spec)) return spec;
  }
  return std::nullopt;
}

std::vector<TaggedSubgroup> normal_subgroups(const FiniteGroup& g) {
  if (g.size() > 360) throw ValidationError("too_large", "normal_subgroups: group order exceeds 360");
  std::vector<TaggedSubgroup> out;
  for (auto& h : all_subgroups(g)) {
    if (!is_normal(g, h)) continue;
    auto type = identify(g, h);
    out.push_back({std::move(h), std::move(type)});
  }
  return out;
}

TaggedSubgroup sylow_2_subgroup(const FiniteGroup& g) {
  std::vector<Element> gens;
  ElementSet current{g.identity()};
  bool grew = true;
  while (grew) {
    grew = false;
    for (Element x = 0; x < g.size(); ++x) {
      if (!is_power_of_two(g.order_of(x)) || std::binary_search(current.begin(), current.end(), x)) continue;
      auto trial = gens;
      trial.push_back(x);
      ElementSet h = generate(g, trial);
      if (!is_power_of_two(h.size())) continue;
      gens = std::move(trial);
      current = std::move(h);
      grew = true;
    }
  }
  std::size_t two_part = g.size() & (~g.size() + 1);
  if (current.size() != two_part) throw std::logic_error("sylow_2_subgroup: greedy growth stopped early");
  auto type = identify(g, current);
  return {std::move(current), std::move(type)};
}

std::optional<std::vector<Element>> contains_subgroup_isomorphic_to(const FiniteGroup& g, const GroupSpec& target) {
  if (target.order() > static_cast<std::int64_t>(g.size())) return std::nullopt;
  return find_witness(g, g.all_elements(), target);
}

std::int64_t outer_automorphism_order(const FiniteGroup& g, const std::vector<Element>& generators,
                                      const Presentation& pres) {
  if (g.size() > 360) throw ValidationError("too_large", "outer_automorphism_order: group order exceeds 360");
  if (pres.generators > 2 || generators.size() != static_cast<std::size_t>(pres.generators)) {
    throw ValidationError("bad_generators", "outer_automorphism_order: expected at most two generators");
  }
  if (!satisfies(g, pres, generators) || generate(g, generators).size() != g.size()) {
    throw ValidationError("bad_generators", "outer_automorphism_order: generators do not satisfy the relations or do not generate");
  }
  std::int64_t automorphisms = 0;
  if (pres.generators == 0) {
    automorphisms = 1;
  } else {
    std::vector<std::vector<Element>> candidates(generators.size());
    for (std::size_t i = 0; i < generators.size(); ++i)
      for (Element x = 0; x < g.size(); ++x)
        if (g.order_of(x) == g.order_of(generators[i])) candidates[i].push_back(x);
    auto check = [&](const std::vector<Element>& img) {
      if (satisfies(g, pres, img) && generate(g, img).size() == g.size()) ++automorphisms;
    };
    if (generators.size() == 1) {
      for (Element x : candidates[0]) check({x});
    } else {
      for (Element x : candidates[0])
        for (Element y : candidates[1]) check({x, y});
    }
  }
  const auto inner = static_cast<std::int64_t>(g.size() / g.center().size());
  return automorphisms / inner;
}

std::int64_t outer_automorphism_order(const FiniteGroup& g, const GroupSpec& spec) {
  auto pres = presentation_of(spec);
  if (!pres) throw ValidationError("no_presentation", "outer_automorphism_order: no presentation for " + spec.to_string());
  auto gens = find_witness(g, g.all_elements(), spec);
  if (!gens || gens->size() != static_cast<std::size_t>(pres->generators) ||
      generate(g, *gens).size() != g.size()) {
    throw ValidationError("bad_generators", "outer_automorphism_order: group is not " + spec.to_string());
  }
  return outer_automorphism_order(g, *gens, *pres);
}

}  // namespace instanton::groups
