#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <functional>
#include <ostream>

#include "instanton/dedekind.hpp"
#include "instanton/error.hpp"
#include "instanton/eta.hpp"
#include "instanton/group_catalog.hpp"
#include "instanton/invariants.hpp"
#include "instanton/monopole.hpp"
#include "instanton/rokhlin.hpp"
#include "instanton/space_forms.hpp"
#include "instanton/subgroups.hpp"

namespace instanton::cli {

namespace {

using Json = nlohmann::ordered_json;
using groups::GroupSpec;

std::string str(const Rational& r) { return r.to_string(); }
std::string str(const BigInt& b) { return b.str(); }

Json vec_json(const Vec3& v) { return Json::array({str(v[0]), str(v[1]), str(v[2])}); }

Json spec_list(const std::vector<GroupSpec>& specs) {
  Json a = Json::array();
  for (const auto& s : specs) a.push_back(s.to_string());
  return a;
}

Json int_list(const std::vector<std::int64_t>& xs) { return Json(xs); }

Json bubble_json(const BubbleInvariants& b) {
  return Json{{"chi", str(b.euler)},
              {"b2", str(b.b2)},
              {"tau", str(b.signature)},
              {"pi1_inf_order", b.pi1_inf_order},
              {"energy_pi2", str(b.asd_energy)},
              {"classified_impossible", b.classified_impossible}};
}

Json catalog_json(const InstantonCatalogEntry& e) {
  return Json{{"dynkin", e.dynkin},
              {"gamma", e.gamma.to_string()},
              {"gamma_order", e.gamma_order},
              {"euler", e.euler},
              {"signature", e.signature}};
}

Json symmetry_json(const CyclicSymmetry& s) {
  Json j;
  j["kind"] = to_string(s.kind);
  if (s.order) j["order"] = s.order;
  else j["order"] = "any";
  j["axis"] = s.axis ? vec_json(*s.axis) : Json(nullptr);
  j["free"] = s.free;
  j["count"] = s.count;
  if (s.generator) j["generator"] = s.generator->to_string();
  return j;
}

Json quotient_json(const QuotientDescriptor& q) {
  Json j;
  j["axis"] = q.symmetry && q.symmetry->axis ? vec_json(*q.symmetry->axis) : Json(nullptr);
  j["order"] = q.symmetry ? q.symmetry->order : 1;
  j["kind"] = q.symmetry ? to_string(q.symmetry->kind) : "trivial";
  j["count"] = q.symmetry ? q.symmetry->count : "1";
  j["chi"] = str(q.invariants.euler);
  j["b2"] = str(q.invariants.b2);
  j["tau"] = str(q.invariants.signature);
  j["pi1_inf_order"] = q.invariants.pi1_inf_order;
  j["energy_pi2"] = str(q.invariants.asd_energy);
  j["corollary_c"] = q.corollary_c;
  j["flat"] = q.flat;
  j["kahler_axis"] = q.kahler_axis ? vec_json(*q.kahler_axis) : Json(nullptr);
  return j;
}

Json eta_json(const EtaValue& e) {
  return Json{{"exact", e.exact ? Json(str(*e.exact)) : Json(nullptr)}, {"numeric", e.numeric}};
}

Rational parse_coordinate(const Json& c) {
  if (c.is_string()) return Rational::parse(c.get<std::string>());
  if (c.is_number_integer()) return Rational(c.get<long long>());
  throw ValidationError("parse", "monopole coordinates must be rational strings or integers");
}

MonopoleConfig load_monopoles(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("io", "cannot open " + path);
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ValidationError("parse", path + ": " + e.what());
  }
  if (!doc.is_array()) throw ValidationError("parse", path + ": expected a JSON array of points");
  std::vector<Vec3> pts;
  for (const auto& p : doc) {
    if (!p.is_array() || p.size() != 3) throw ValidationError("parse", path + ": each point needs 3 coordinates");
    pts.push_back({parse_coordinate(p[0]), parse_coordinate(p[1]), parse_coordinate(p[2])});
  }
  return MonopoleConfig(std::move(pts));
}

Json group_json(const GroupSpec& spec, const groups::FiniteGroup& g) {
  const auto p = groups::group_profile(g);
  Json hist = Json::object();
  for (const auto& [order, count] : p.element_order_histogram) hist[std::to_string(order)] = count;
  return Json{{"spec", spec.to_string()},
              {"order", p.order},
              {"center_order", p.center_order},
              {"involution_count", p.involution_count},
              {"element_orders", hist},
              {"abelianization", p.abelianization_invariants}};
}

Json type_json(const std::optional<GroupSpec>& t) { return t ? Json(t->to_string()) : Json(nullptr); }

Json reproduce_paper(bool timing) {
  Json cases = Json::array();
  auto timed = [&](Json entry, const std::function<void(Json&)>& body) {
    const auto start = std::chrono::steady_clock::now();
    body(entry);
    if (timing) {
      entry["seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
    cases.push_back(std::move(entry));
  };

  timed(Json{{"case", "icosahedral"}}, [](Json& e) {
    const auto cands = groups::extension_candidates(GroupSpec::binary_icosahedral(), 3);
    e["extension"] = "1 -> I* -> G -> Z3 -> 1";
    e["candidates"] = spec_list(cands);
    e["verdict"] = cands.empty() ? "impossible" : "open";
  });
  timed(Json{{"case", "octahedral"}}, [](Json& e) {
    const auto cands = groups::extension_candidates(GroupSpec::binary_octahedral(), 2);
    e["extension"] = "1 -> O* -> G -> Z2 -> 1";
    e["candidates"] = spec_list(cands);
    e["verdict"] = cands.empty() ? "impossible" : "open";
  });
  timed(Json{{"case", "tetrahedral"}}, [](Json& e) {
    const auto cands = groups::extension_candidates(GroupSpec::binary_tetrahedral(), 7);
    const auto t = tetrahedral_contradiction();
    e["extension"] = "1 -> T* -> G -> Z7 -> 1";
    e["candidates"] = spec_list(cands);
    e["boundary_seifert"] = t.boundary.to_string();
    e["chi"] = str(t.euler);
    e["tau"] = str(t.signature);
    e["mu"] = str(t.spin.mu);
    e["required_mu"] = str(t.spin.required);
    e["verdict"] = t.spin.contradiction ? "impossible" : "open";
  });
  timed(Json{{"case", "dihedral"}}, [](Json& e) {
    const auto scan = dihedral_contradiction_scan(1000, 1000);
    e["family1_solutions"] = int_list(scan.family1);
    e["family2_solutions"] = int_list(scan.family2);
    e["family2_without_constant_solutions"] = int_list(scan.family2_without_constant);
    const bool only_trivial = scan.family1 == std::vector<std::int64_t>{1} && scan.family2.empty() &&
                              scan.family2_without_constant.empty();
    e["verdict"] = only_trivial ? "impossible" : "open";
  });
  cases.push_back(Json{{"case", "cyclic"}, {"verdict", "survives"}});

  bool all = true;
  for (const auto& c : cases)
    if (c["case"] != "cyclic" && c["verdict"] != "impossible") all = false;
  return Json{{"cases", cases}, {"non_cyclic_all_impossible", all}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations for quotients of gravitational instantons", "instanton"};
  app.require_subcommand(1);
  app.fallthrough();
  bool pretty = false;
  app.add_flag("--pretty", pretty, "Indent JSON output");
  Json result;
  std::function<void()> action;

  // dedekind
  auto* ded = app.add_subcommand("dedekind", "Dedekind sums and reciprocity checks");
  ded->require_subcommand(1);
  std::string method_name = "fast";
  long long a = 0, b = 0, c = 0, x = 0, y = 0, p = 0, q = 0, r = 0;
  auto method = [&] {
    if (method_name == "fast") return dedekind::Method::fast;
    if (method_name == "brute") return dedekind::Method::brute;
    throw ValidationError("parse", "--method must be fast or brute");
  };
  auto* ds = ded->add_subcommand("s", "s(b, c)");
  ds->add_option("--b", b)->required();
  ds->add_option("--c", c)->required();
  ds->add_option("--method", method_name);
  ds->callback([&] { action = [&] { result = {{"value", str(dedekind::s_sum(b, c, method()))}}; }; });
  auto* dd = ded->add_subcommand("d", "D(a, b; c)");
  dd->add_option("--a", a)->required();
  dd->add_option("--b", b)->required();
  dd->add_option("--c", c)->required();
  dd->add_option("--method", method_name);
  dd->callback([&] { action = [&] { result = {{"value", str(dedekind::d_sum(a, b, c, method()))}}; }; });
  auto* dr = ded->add_subcommand("rademacher", "Rademacher reciprocity defect");
  dr->add_option("--a", a)->required();
  dr->add_option("--b", b)->required();
  dr->add_option("--c", c)->required();
  dr->callback([&] { action = [&] { result = {{"value", str(dedekind::rademacher_defect(a, b, c))}}; }; });
  auto* dsp = ded->add_subcommand("special", "D(2x+y, 2x-y; 2xy) in closed form");
  dsp->add_option("--x", x)->required();
  dsp->add_option("--y", y)->required();
  dsp->callback([&] { action = [&] { result = {{"value", str(dedekind::d_special(x, y))}}; }; });
  auto* dc = ded->add_subcommand("cot", "Cotangent sum for D(p, q; r)");
  dc->add_option("--p", p)->required();
  dc->add_option("--q", q)->required();
  dc->add_option("--r", r)->required();
  dc->callback([&] {
    action = [&] {
      result = {{"value", dedekind::cotangent_sum(p, q, r)}, {"exact", str(dedekind::d_sum(p, q, r))}};
    };
  });

  // eta
  auto* eta = app.add_subcommand("eta", "Eta invariants of spherical space forms");
  eta->require_subcommand(1);
  std::int64_t u = 0, v = 0, m = 0, d = 0, max_m = 1000, max_b = 1000, eb = 0;
  auto* ec = eta->add_subcommand("closed", "1/(6uv) + v/(3u) - 4 s(v, u)");
  ec->add_option("--u", u)->required();
  ec->add_option("--v", v)->required();
  ec->callback([&] { action = [&] { result = {{"value", str(eta_dihedral_closed(u, v))}}; }; });
  auto* ecase = eta->add_subcommand("case", "Piecewise formula for Z_m x D*_4b");
  ecase->add_option("--m", m)->required();
  ecase->add_option("--b", eb)->required();
  ecase->callback([&] { action = [&] { result = {{"value", str(eta_case_formula(m, eb))}}; }; });
  auto* eg = eta->add_subcommand("geometric", "Eta forced by signature and Gauss-Bonnet");
  eg->add_option("--b", eb)->required();
  eg->add_option("--d", d)->required();
  eg->callback([&] { action = [&] { result = {{"value", str(eta_geometric(eb, d))}}; }; });
  auto* er = eta->add_subcommand("rep", "Cotangent sum over the Z_u x D*_4v representation");
  er->add_option("--u", u)->required();
  er->add_option("--v", v)->required();
  er->callback([&] {
    action = [&] {
      const auto rep = dihedral_representation(u, v);
      result = eta_json(eta_space_form(rep));
      result["order"] = rep.order();
    };
  });
  auto* esc = eta->add_subcommand("scan", "Search the dihedral contradiction equations");
  esc->add_option("--max-m", max_m);
  esc->add_option("--max-b", max_b);
  esc->callback([&] {
    action = [&] {
      const auto s = dihedral_contradiction_scan(max_m, max_b);
      result = {{"family1", int_list(s.family1)},
                {"family2", int_list(s.family2)},
                {"family2_without_constant", int_list(s.family2_without_constant)}};
    };
  });

  // rokhlin
  auto* rok = app.add_subcommand("rokhlin", "Rokhlin invariant of a Seifert Z2-homology sphere");
  std::string seifert;
  bool detail = false;
  rok->add_option("--seifert", seifert, "\"b; a1/b1, a2/b2, ...\"")->required();
  rok->add_flag("--detail", detail, "Include c-values, Euler number and mod 2 class");
  rok->callback([&] {
    action = [&] {
      const auto s = SeifertInvariants::parse(seifert);
      const auto mu = rokhlin_mu(s);
      const auto z2 = is_z2_homology_sphere(s);
      result = {{"mu", str(mu.mu)}, {"z2hs", z2.z2_homology_sphere}, {"certificate", str(z2.certificate)}};
      if (detail) {
        result["c_values"] = int_list(mu.c_values);
        result["euler"] = str(euler_number(s).general);
        result["euler_sign"] = mu.euler_sign;
        result["mod2"] = mu.mod2 ? Json(*mu.mod2) : Json(nullptr);
      }
    };
  });

  // group
  auto* grp = app.add_subcommand("group", "Construct a space-form group and query it");
  std::string spec_text, contains_text;
  bool normal = false, sylow = false, outer = false;
  grp->add_option("--spec", spec_text, "e.g. Z96, D*96, Z3xD*32, D'(k=3,p=3), T'(v=2), T*, O*, I*")->required();
  grp->add_flag("--normal", normal, "List normal subgroups with types");
  grp->add_flag("--sylow", sylow, "Report a Sylow 2-subgroup");
  grp->add_flag("--outer", outer, "Order of the outer automorphism group");
  grp->add_option("--contains", contains_text, "Search for a subgroup of this type");
  grp->callback([&] {
    action = [&] {
      const auto spec = GroupSpec::parse(spec_text);
      if (spec.order() > 360 && (normal || sylow || outer || !contains_text.empty())) {
        throw ValidationError("too_large", "subgroup queries are limited to order 360");
      }
      const auto g = groups::construct_group(spec);
      result = group_json(spec, g);
      if (normal) {
        Json list = Json::array();
        for (const auto& n : groups::normal_subgroups(g))
          list.push_back({{"order", n.elements.size()}, {"type", type_json(n.type)}});
        result["normal_subgroups"] = list;
      }
      if (sylow) {
        const auto s = groups::sylow_2_subgroup(g);
        result["sylow2"] = {{"order", s.elements.size()}, {"type", type_json(s.type)}};
      }
      if (outer) result["outer_automorphisms"] = groups::outer_automorphism_order(g, spec);
      if (!contains_text.empty()) {
        const auto target = GroupSpec::parse(contains_text);
        const auto w = groups::contains_subgroup_isomorphic_to(g, target);
        Json witness = Json(nullptr);
        if (w) {
          witness = Json::array();
          for (auto e : *w) witness.push_back(g.label(e));
        }
        result["contains"] = {{"target", target.to_string()}, {"result", w.has_value()}, {"witness", witness}};
      }
    };
  });

  // spaceforms
  auto* sf = app.add_subcommand("spaceforms", "Space-form groups of a given order, or extension candidates");
  std::int64_t order = 0, quotient = 0;
  std::string normal_text;
  sf->add_option("--order", order);
  sf->add_option("--normal", normal_text, "Normal subgroup type for an extension query");
  sf->add_option("--quotient", quotient, "Quotient order for an extension query");
  sf->callback([&] {
    action = [&] {
      if (!normal_text.empty()) {
        if (quotient < 1) throw ValidationError("parse", "--normal needs --quotient");
        const auto n = GroupSpec::parse(normal_text);
        result = {{"normal", n.to_string()},
                  {"quotient", quotient},
                  {"candidates", spec_list(groups::extension_candidates(n, quotient))}};
      } else {
        if (order < 1) throw ValidationError("parse", "spaceforms needs --order or --normal/--quotient");
        result = {{"order", order}, {"groups", spec_list(groups::space_form_groups_of_order(order))}};
      }
    };
  });

  // quotients
  auto* quo = app.add_subcommand("quotients", "Free cyclic quotients of a Gibbons-Hawking space");
  std::string file;
  quo->add_option("--file", file, "JSON array of [x, y, z] rational strings")->required();
  quo->callback([&] {
    action = [&] {
      const auto f = load_monopoles(file);
      result = Json::array();
      for (const auto& qd : classify_quotients(f)) result.push_back(quotient_json(qd));
    };
  });

  // symmetries
  auto* sym = app.add_subcommand("symmetries", "All cyclic rotation groups preserving a monopole set");
  sym->add_option("--file", file)->required();
  sym->callback([&] {
    action = [&] {
      result = Json::array();
      for (const auto& s : symmetry_rotations(recenter(load_monopoles(file)))) result.push_back(symmetry_json(s));
    };
  });

  // bound
  auto* bnd = app.add_subcommand("bound", "Energy bound by b2, or catalog rows and their quotients");
  std::int64_t b2 = -1, k = 1, qd = 1;
  std::string dynkin;
  bnd->add_option("--b2", b2);
  bnd->add_option("--dynkin", dynkin, "A, D, E6, E7 or E8");
  bnd->add_option("--k", k);
  bnd->add_option("--d", qd, "Degree of the quotient");
  bnd->callback([&] {
    action = [&] {
      if (!dynkin.empty()) {
        const auto entry = catalog_lookup(parse_dynkin_type(dynkin), k);
        const auto inv = quotient_invariants(entry, qd);
        result = {{"cover", catalog_json(entry)}, {"d", qd}, {"quotient", bubble_json(inv)},
                  {"eta", str(signature_eta(inv.signature, inv.asd_energy))}};
      } else {
        if (b2 < 0) throw ValidationError("parse", "bound needs --b2 or --dynkin");
        result = {{"b2", b2}, {"bound_pi2", str(corollary_b_bound(b2))}};
      }
    };
  });

  // reproduce-paper
  auto* rep = app.add_subcommand("reproduce-paper", "Run the full non-cyclic case analysis");
  bool timing = false;
  rep->add_flag("--timing", timing, "Add wall-clock seconds per case");
  rep->callback([&] { action = [&] { result = reproduce_paper(timing); }; });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return 2;
  }

  try {
    action();
  } catch (const FixedPointError& e) {
    err << "error (fixed_point): " << e.what() << "\n";
    return 2;
  } catch (const ValidationError& e) {
    err << "error (" << e.cause() << "): " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
  out << (pretty ? result.dump(2) : result.dump()) << "\n";
  return 0;
}

}  // namespace instanton::cli
