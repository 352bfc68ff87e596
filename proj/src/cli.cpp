#include "finbool/cli.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "finbool/algebra.hpp"
#include "finbool/cantor.hpp"
#include "finbool/errors.hpp"
#include "finbool/harness.hpp"
#include "finbool/independence.hpp"
#include "finbool/json_io.hpp"
#include "finbool/measure.hpp"
#include "finbool/polynomial.hpp"
#include "finbool/version.hpp"

namespace finbool {

namespace {

std::string read_all(const std::string& path) {
  std::ostringstream ss;
  if (path == "-") {
    ss << std::cin.rdbuf();
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw input_error("cannot open input file: " + path);
    ss << in.rdbuf();
  }
  return ss.str();
}

Json load_input(const std::string& path) { return parse_json_text(read_all(path)); }

// Sign vectors rendered with character i = sign of member i.
std::string signs_str(const Mask& m) {
  std::string s(m.ground(), '0');
  for (std::size_t i = 0; i < m.ground(); ++i)
    if (m.test(i)) s[i] = '1';
  return s;
}

Algebra algebra_of(const SetFamily& f) {
  return f.members.empty() ? Algebra::trivial(f.ground) : Algebra::generated_by(f);
}

const char* extension_kind_str(ExtensionKind k) {
  switch (k) {
    case ExtensionKind::already_member:
      return "member";
    case ExtensionKind::minimal:
      return "minimal";
    case ExtensionKind::not_minimal:
      return "not_minimal";
  }
  return "?";
}

struct Cli {
  std::ostream& out;
  std::ostream& err;
  bool pretty = false;
  bool json = true;  // accepted for symmetry; JSON is the only output form
  std::string command = {};
  std::function<int()> action = {};

  void emit(Json report) const {
    Json j{{"tool", kToolName},
           {"version", kVersion},
           {"command", command},
           {"report", std::move(report)}};
    out << j.dump(pretty ? 2 : -1) << '\n';
  }
};

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err) {
  CLI::App app{"exact toolkit for finite Boolean algebras and set systems"};
  app.require_subcommand(0, 1);
  Cli cli{out, err};
  app.set_version_flag("--version", std::string(kToolName) + " " + kVersion);
  app.add_flag("--pretty", cli.pretty, "indent JSON output");
  app.add_flag("--json", cli.json, "emit JSON (the default and only format)");

  // Shared option storage; each subcommand binds the fields it uses.
  std::string in_path = "-";
  std::string poly_text;
  std::string bound_text;
  std::uint64_t n_value = 0;
  std::uint64_t r_value = 0;
  std::uint32_t t_value = 4;
  std::uint32_t p_value = 0;
  std::uint32_t count_value = 5;
  std::uint32_t m_value = 36;
  std::uint32_t nmax_value = 5;
  std::uint32_t k_value = 0;
  std::optional<std::uint32_t> arity;
  std::optional<std::size_t> cap;
  bool require_flag = false;
  bool cross_check = false;
  std::uint64_t seed = 42;
  std::string profile_text = "quick";

  auto add_in = [&](CLI::App* cmd) {
    cmd->add_option("--in", in_path, "input JSON file, or - for stdin")
        ->capture_default_str();
  };
  auto set_action = [&](CLI::App* cmd, std::string name, std::function<int()> fn) {
    cmd->callback([&cli, name, fn] {
      cli.command = name;
      cli.action = fn;
    });
  };

  // ---- algebra ----------------------------------------------------------
  CLI::App* algebra = app.add_subcommand("algebra", "finite algebras given by atoms");

  CLI::App* atoms = algebra->add_subcommand(
      "atoms", "atoms of the algebra generated by a set family");
  add_in(atoms);
  set_action(atoms, "algebra atoms", [&] {
    SetFamily f = family_from_json(load_input(in_path));
    Algebra b = algebra_of(f);
    Json sets = Json::array();
    for (const Mask& a : b.atoms()) sets.push_back(mask_to_json(a));
    cli.emit(Json{{"ground", b.ground()}, {"count", b.atoms().size()}, {"atoms", sets}});
    return 0;
  });

  CLI::App* minimal_ext = algebra->add_subcommand(
      "minimal-ext", "is adjoining x to the generated algebra a minimal step?");
  add_in(minimal_ext);
  minimal_ext->add_flag("--require-minimal", require_flag,
                        "exit 1 when the extension is not minimal");
  set_action(minimal_ext, "algebra minimal-ext", [&] {
    Json in = load_input(in_path);
    SetFamily f = family_from_json(in.at("family"));
    Mask x = mask_from_json(in.at("x"), f.ground);
    Algebra b = algebra_of(f);
    ExtensionVerdict v = minimal_extension(b, x);
    Json report{{"kind", extension_kind_str(v.kind)}};
    if (v.kind == ExtensionKind::not_minimal) report["witness"] = mask_to_json(v.witness);
    if (v.kind != ExtensionKind::already_member) {
      Json split = Json::array();
      for (const Mask& a : split_atoms(b, x)) split.push_back(mask_to_json(a));
      report["split_atoms"] = std::move(split);
    }
    cli.emit(std::move(report));
    return (require_flag && v.kind == ExtensionKind::not_minimal) ? 1 : 0;
  });

  CLI::App* chain = algebra->add_subcommand(
      "chain", "do the members, adjoined in order, give minimal steps only?");
  add_in(chain);
  set_action(chain, "algebra chain", [&] {
    SetFamily f = family_from_json(load_input(in_path));
    ChainVerdict v = verify_minimal_chain(f);
    Json report{{"ok", v.ok}};
    if (v.ok) {
      report["atoms"] = v.final_algebra.atoms().size();
    } else {
      report["fail_index"] = v.fail_index;
      report["generator"] = mask_to_json(v.fail_generator);
      report["witness"] = mask_to_json(v.witness);
    }
    cli.emit(std::move(report));
    return v.ok ? 0 : 1;
  });

  CLI::App* count_inter = algebra->add_subcommand(
      "count-intermediate", "number of algebras between the generated one and "
                            "its extension by x");
  add_in(count_inter);
  set_action(count_inter, "algebra count-intermediate", [&] {
    Json in = load_input(in_path);
    SetFamily f = family_from_json(in.at("family"));
    Mask x = mask_from_json(in.at("x"), f.ground);
    std::uint64_t count = count_intermediate_algebras(algebra_of(f), x);
    cli.emit(Json{{"count", count}});
    return 0;
  });

  // ---- indep ------------------------------------------------------------
  CLI::App* indep = app.add_subcommand("indep", "independence of set families");

  CLI::App* itest = indep->add_subcommand("test", "are all sign cells nonempty?");
  add_in(itest);
  itest->add_flag("--require", require_flag, "exit 1 when the family is dependent");
  set_action(itest, "indep test", [&] {
    SetFamily f = family_from_json(load_input(in_path));
    IndependenceVerdict v = is_independent(f);
    Json report{{"independent", v.independent}};
    if (!v.independent) {
      report["missing_cell"] = signs_str(v.missing_cell);
      cli.emit(std::move(report));
      return require_flag ? 1 : 0;
    }
    cli.emit(std::move(report));
    return 0;
  });

  CLI::App* imax = indep->add_subcommand("max", "largest independent subfamily");
  add_in(imax);
  std::uint64_t cap_opt = 0;
  imax->add_option("--cap", cap_opt, "stop at this size (0 = unlimited)");
  set_action(imax, "indep max", [&] {
    SetFamily f = family_from_json(load_input(in_path));
    if (cap_opt > 0) cap = cap_opt;
    MaxIndependentResult r = max_independent(f, cap);
    cli.emit(Json{{"size", r.size}, {"members", r.members}});
    return 0;
  });

  CLI::App* itr = indep->add_subcommand(
      "transpose", "distinct membership patterns of the ground points");
  add_in(itr);
  set_action(itr, "indep transpose", [&] {
    SetFamily f = family_from_json(load_input(in_path));
    cli.emit(patterns_to_json(transpose(f)));
    return 0;
  });

  // ---- sauer ------------------------------------------------------------
  CLI::App* sauer = app.add_subcommand("sauer", "shattering and the Sauer bound");

  CLI::App* sextract = sauer->add_subcommand(
      "extract", "one shattered coordinate set per pattern");
  add_in(sextract);
  set_action(sextract, "sauer extract", [&] {
    PatternFamily c = patterns_from_json(load_input(in_path));
    std::vector<Mask> sets = sauer_shelah_extract(c);
    bool all = sets.size() == c.size();
    Json arr = Json::array();
    for (const Mask& s : sets) {
      if (!shattered(c, s)) all = false;
      arr.push_back(mask_to_json(s));
    }
    cli.emit(Json{{"count", sets.size()}, {"sets", arr}, {"all_shattered", all}});
    return all ? 0 : 1;
  });

  CLI::App* scheck = sauer->add_subcommand(
      "check", "families above the Sauer bound shatter a set of size n");
  add_in(scheck);
  scheck->add_option("--n", n_value, "shattered-set size to certify")->required();
  set_action(scheck, "sauer check", [&] {
    PatternFamily c = patterns_from_json(load_input(in_path));
    BigInt bound = sauer_bound(c.coords, n_value);
    bool exceeds = BigInt(c.size()) > bound;
    Json report{{"size", c.size()},
                {"bound", bound.str()},
                {"exceeds_bound", exceeds}};
    if (!exceeds) {
      cli.emit(std::move(report));
      return 0;
    }
    for (const Mask& s : sauer_shelah_extract(c))
      if (s.count() >= n_value && shattered(c, s)) {
        report["witness"] = mask_to_json(s);
        cli.emit(std::move(report));
        return 0;
      }
    report["witness"] = nullptr;
    cli.emit(std::move(report));
    return 1;  // would refute the bound; reported, never repaired
  });

  CLI::App* sexh = sauer->add_subcommand(
      "exhaustive", "check every pattern family over t coordinates");
  sexh->add_option("--t", t_value, "coordinate count, 1..4")->capture_default_str();
  set_action(sexh, "sauer exhaustive", [&] {
    SweepOutcome o = sauer_exhaustive_sweep(t_value);
    Json report{{"t", t_value}, {"families", o.families}, {"ok", o.ok}};
    if (!o.ok) {
      report["fail_code"] = o.fail_code;
      report["what"] = o.what;
    }
    cli.emit(std::move(report));
    return o.ok ? 0 : 1;
  });

  // ---- itable -----------------------------------------------------------
  CLI::App* itable = app.add_subcommand(
      "itable", "least s with sum_{i<n} C(rs,i) < 2^s");
  itable->add_option("--n", n_value, "independence length bound")->required();
  itable->add_option("--r", r_value, "polynomial arity")->required();
  set_action(itable, "itable", [&] {
    std::uint64_t s = independence_threshold(n_value, r_value);
    cli.emit(Json{{"I", s},
                  {"n", n_value},
                  {"r", r_value},
                  {"holds_at", s},
                  {"fails_at", s - 1}});
    return 0;
  });

  // ---- poly -------------------------------------------------------------
  CLI::App* poly = app.add_subcommand("poly", "Boolean polynomial images");

  std::uint32_t arity_opt = 0;
  CLI::App* pimage = poly->add_subcommand("image", "all values over member tuples");
  add_in(pimage);
  pimage->add_option("--poly", poly_text, "prefix term, e.g. \"(or (and x0 x1) x2)\"")
      ->required();
  pimage->add_option("--arity", arity_opt, "widen the variable count");
  set_action(pimage, "poly image", [&] {
    if (arity_opt > 0) arity = arity_opt;
    BooleanPolynomial p = BooleanPolynomial::parse(poly_text, arity);
    SetFamily f = family_from_json(load_input(in_path));
    SetFamily image = poly_image(f, p);
    cli.emit(Json{{"poly", p.str()},
                  {"arity", p.arity()},
                  {"size", image.size()},
                  {"image", family_to_json(image)}});
    return 0;
  });

  CLI::App* pverify = poly->add_subcommand(
      "verify", "image independence stays under the threshold");
  add_in(pverify);
  pverify->add_option("--poly", poly_text, "prefix term")->required();
  pverify->add_option("--n", n_value, "independence bound assumed of the input")
      ->required();
  set_action(pverify, "poly verify", [&] {
    BooleanPolynomial p = BooleanPolynomial::parse(poly_text);
    SetFamily f = family_from_json(load_input(in_path));
    PolyBoundResult r = check_poly_bound(f, n_value, p);
    Json report{{"threshold", r.threshold}, {"image_size", r.image.size()}};
    switch (r.status) {
      case PolyBoundResult::Status::precondition_failed:
        report["status"] = "precondition_failed";
        report["independent_members"] = r.precondition.members;
        cli.emit(std::move(report));
        return 2;
      case PolyBoundResult::Status::violated:
        report["status"] = "violated";
        report["witness"] = r.image_best.members;
        report["image"] = family_to_json(r.image);
        cli.emit(std::move(report));
        return 1;
      case PolyBoundResult::Status::holds:
        break;
    }
    report["status"] = "holds";
    report["best_size"] = r.image_best.size;
    cli.emit(std::move(report));
    return 0;
  });

  // ---- measure ----------------------------------------------------------
  CLI::App* measure = app.add_subcommand("measure", "exact measures on finite algebras");

  CLI::App* mof = measure->add_subcommand("of", "measure of a member set");
  add_in(mof);
  set_action(mof, "measure of", [&] {
    Json in = load_input(in_path);
    Measure mu = measure_from_json(in.at("measure"));
    Mask a = mask_from_json(in.at("set"), mu.algebra().ground());
    cli.emit(Json{{"value", rational_str(measure_of(mu, a))}});
    return 0;
  });

  CLI::App* msep = measure->add_subcommand(
      "sep", "least measure of a pairwise symmetric difference");
  add_in(msep);
  msep->add_option("--bound", bound_text, "exit 1 when the minimum falls below this");
  set_action(msep, "measure sep", [&] {
    Json in = load_input(in_path);
    Measure mu = measure_from_json(in.at("measure"));
    SetFamily f = family_from_json(in.at("family"));
    Rational min = min_pairwise_separation(mu, f);
    Json report{{"min_separation", rational_str(min)}};
    if (bound_text.empty()) {
      cli.emit(std::move(report));
      return 0;
    }
    Rational eps = parse_rational(bound_text);
    SeparationProbe probe = separated_independence_probe(mu, f, eps);
    report["bound"] = rational_str(eps);
    report["separated"] = probe.separated;
    report["max_independent"] = probe.best.size;
    if (!probe.separated)
      report["witness_pair"] = Json::array({probe.offend_i, probe.offend_j});
    cli.emit(std::move(report));
    return probe.separated ? 0 : 1;
  });

  CLI::App* mprod = measure->add_subcommand(
      "product", "fair product measure on an independent family");
  add_in(mprod);
  set_action(mprod, "measure product", [&] {
    SetFamily f = family_from_json(load_input(in_path));
    ProductMeasureResult r = product_measure_on_independent(f);
    if (!r.independent) {
      cli.emit(Json{{"independent", false},
                    {"missing_cell", signs_str(r.missing_cell)}});
      return 2;
    }
    cli.emit(Json{{"independent", true},
                  {"measure", measure_to_json(*r.measure)},
                  {"nonatomic_threshold", rational_str(nonatomic_threshold(*r.measure))}});
    return 0;
  });

  CLI::App* mdef = measure->add_subcommand(
      "defects", "approximation defects of a subalgebra");
  add_in(mdef);
  set_action(mdef, "measure defects", [&] {
    Json in = load_input(in_path);
    Measure mu = measure_from_json(in.at("measure"));
    SetFamily sub = family_from_json(in.at("generators"));
    cli.emit(Json{{"type_defect", rational_str(type_defect(mu, sub))},
                  {"determination_defect",
                   rational_str(determination_defect(mu, sub))}});
    return 0;
  });

  CLI::App* matom = measure->add_subcommand(
      "i1-atom", "without independent pairs, g is a member or fills one atom");
  add_in(matom);
  set_action(matom, "measure i1-atom", [&] {
    Json in = load_input(in_path);
    SetFamily g0 = family_from_json(in.at("g0"));
    Mask g = mask_from_json(in.at("g"), g0.ground);
    AtomCheckResult r = i1_atom_check(g0, g);
    switch (r.status) {
      case AtomCheckResult::Status::precondition_failed:
        cli.emit(Json{{"status", "precondition_failed"},
                      {"independent_pair", r.pair}});
        return 2;
      case AtomCheckResult::Status::violated:
        cli.emit(Json{{"status", "violated"},
                      {"lower", mask_to_json(r.lower)},
                      {"upper", mask_to_json(r.upper)}});
        return 1;  // would refute the alternative; reported, never repaired
      case AtomCheckResult::Status::in_algebra:
        cli.emit(Json{{"status", "in_algebra"}});
        return 0;
      case AtomCheckResult::Status::atom:
        break;
    }
    cli.emit(Json{{"status", "atom"},
                  {"lower", mask_to_json(r.lower)},
                  {"upper", mask_to_json(r.upper)},
                  {"gap", mask_to_json(r.upper - r.lower)}});
    return 0;
  });

  // ---- cantor -----------------------------------------------------------
  CLI::App* cantor = app.add_subcommand(
      "cantor", "cylinders over {0,1}^m under the fair-coin measure");

  CLI::App* csigma = cantor->add_subcommand("sigma", "the stage-n cylinder");
  add_in(csigma);
  csigma->add_option("--n", k_value, "stage index")->required();
  set_action(csigma, "cantor sigma", [&] {
    CantorParams params = cantor_params_from_json(load_input(in_path));
    Cylinder c = stage_cylinder(params, k_value);
    cli.emit(Json{{"m", c.m},
                  {"cylinder", cylinder_to_json(c)},
                  {"domain_size", c.domain.count()},
                  {"measure", rational_str(cylinder_measure(c))}});
    return 0;
  });

  CLI::App* cbuild = cantor->add_subcommand(
      "build", "union of stages 0..n_max, with its exact measure");
  add_in(cbuild);
  cbuild->add_option("--n-max", nmax_value, "last stage")->capture_default_str();
  cbuild->add_flag("--cross-check", cross_check,
                   "also compute the measure by inclusion-exclusion");
  set_action(cbuild, "cantor build", [&] {
    CantorParams params = cantor_params_from_json(load_input(in_path));
    CylinderUnion u = stage_union(params, nmax_value);
    Rational measure = union_measure(u);
    Json arr = Json::array();
    for (const Cylinder& c : u.cylinders) arr.push_back(cylinder_to_json(c));
    Json report{{"m", u.m},
                {"stages", u.cylinders.size()},
                {"cylinders", arr},
                {"measure", rational_str(measure)}};
    if (cross_check) {
      Rational other = union_measure_incl_excl(u);
      report["incl_excl_measure"] = rational_str(other);
      report["routes_agree"] = other == measure;
      cli.emit(std::move(report));
      return other == measure ? 0 : 1;
    }
    cli.emit(std::move(report));
    return 0;
  });

  CLI::App* cconv = cantor->add_subcommand(
      "converge", "least stage from which the first k bits of x are fixed");
  add_in(cconv);
  cconv->add_option("--k", k_value, "prefix length")->required();
  cconv->add_option("--n-max", nmax_value, "last stage")->capture_default_str();
  set_action(cconv, "cantor converge", [&] {
    CantorParams params = cantor_params_from_json(load_input(in_path));
    ConvergenceResult r = convergence_index(params, k_value, nmax_value);
    Json report{{"found", r.found}};
    if (r.found) report["index"] = r.index;
    cli.emit(std::move(report));
    return 0;
  });

  CLI::App* csep = cantor->add_subcommand(
      "separate", "a family sharing p stages, then splitting apart");
  csep->add_option("--p", p_value, "shared stage count")->capture_default_str();
  csep->add_option("--count", count_value, "family size")->capture_default_str();
  csep->add_option("--m", m_value, "truncation depth")->capture_default_str();
  set_action(csep, "cantor separate", [&] {
    std::vector<CantorParams> family = separated_family(p_value, count_value, m_value);
    Json members = Json::array();
    for (const CantorParams& q : family) members.push_back(cantor_params_to_json(q));
    FamilyShapeCheck shape = check_family_shape(p_value, family);
    cli.emit(Json{{"p", p_value}, {"members", members}, {"shape_ok", shape.ok}});
    return shape.ok ? 0 : 1;
  });

  CLI::App* cverify = cantor->add_subcommand(
      "verify", "all pairwise difference measures meet the separation bound");
  add_in(cverify);
  cverify->add_option("--p", p_value, "shared stage count")->capture_default_str();
  cverify->add_option("--n-max", nmax_value, "last stage")->capture_default_str();
  set_action(cverify, "cantor verify", [&] {
    Json in = load_input(in_path);
    const Json& members = in.is_array() ? in : in.at("members");
    std::vector<CantorParams> family;
    for (const Json& j : members) family.push_back(cantor_params_from_json(j));
    FamilyShapeCheck shape = check_family_shape(p_value, family);
    if (!shape.ok) {
      cli.emit(Json{{"shape_ok", false}, {"what", shape.what}});
      return 1;
    }
    SeparationVerdict v = verify_separation_bound(p_value, family, nmax_value);
    Json matrix = Json::array();
    for (const auto& row : v.matrix) {
      Json r = Json::array();
      for (const Rational& q : row) r.push_back(rational_str(q));
      matrix.push_back(std::move(r));
    }
    Json report{{"shape_ok", true},
                {"bound", rational_str(v.bound)},
                {"holds", v.holds},
                {"matrix", matrix}};
    if (!v.holds) report["witness_pair"] = Json::array({v.fail_i, v.fail_j});
    cli.emit(std::move(report));
    return v.holds ? 0 : 1;
  });

  // ---- verify -----------------------------------------------------------
  CLI::App* verify = app.add_subcommand(
      "verify", "run the seeded acceptance checks");
  verify->add_option("--seed", seed, "64-bit seed")->capture_default_str();
  verify->add_option("--profile", profile_text, "quick or full")
      ->check(CLI::IsMember({"quick", "full"}))
      ->capture_default_str();
  set_action(verify, "verify", [&] {
    Profile profile = profile_text == "full" ? Profile::full : Profile::quick;
    std::vector<CheckResult> results = run_acceptance(seed, profile);
    Json checks = Json::array();
    bool all_pass = true;
    for (const CheckResult& r : results) {
      checks.push_back(check_to_json(r));
      if (r.status != CheckStatus::pass) all_pass = false;
    }
    cli.emit(Json{{"seed", seed},
                  {"profile", profile_text},
                  {"all_pass", all_pass},
                  {"checks", checks}});
    return all_pass ? 0 : 1;
  });

  // ---- dispatch ---------------------------------------------------------
  // Global flags (--pretty, --json) remain usable after a subcommand.
  std::function<void(CLI::App*)> allow_fallthrough = [&](CLI::App* a) {
    a->fallthrough();
    for (CLI::App* s : a->get_subcommands({})) allow_fallthrough(s);
  };
  allow_fallthrough(&app);

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back(kToolName);
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
    if (!cli.action) {
      err << app.help();
      return 2;
    }
    return cli.action();
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  } catch (const truncation_error& e) {
    err << "input error: " << e.what() << '\n';
    return 2;
  } catch (const input_error& e) {
    err << "input error: " << e.what() << '\n';
    return 2;
  } catch (const resource_error& e) {
    err << "resource cap exceeded: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return 70;
  }
}

}  // namespace finbool
