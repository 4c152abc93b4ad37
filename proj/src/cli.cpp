#include "polygroup/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "polygroup/io.hpp"
#include "polygroup/svg.hpp"

namespace polygroup::cli {

namespace {

constexpr const char* kFreeWordNote =
    "nonvanishing is decided in the free-word representation; a fiber "
    "that cancels only in the group ring of the quotient would be "
    "invisible";

std::string read_stream(std::istream& in) {
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

// '-' reads stdin, a leading '{' or '[' is inline JSON, anything else is
// a file path.
Json load_json_input(const std::string& arg) {
  std::string text;
  if (arg == "-") {
    text = read_stream(std::cin);
  } else if (!arg.empty() && (arg[0] == '{' || arg[0] == '[')) {
    text = arg;
  } else {
    std::ifstream f(arg);
    if (!f)
      throw ValidationError("io_error", "cannot open input file: " + arg);
    text = read_stream(f);
  }
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ValidationError("bad_json", e.what());
  }
}

std::string load_presentation_text(const std::string& arg) {
  if (arg == "-") return read_stream(std::cin);
  return arg;
}

Direction phi_from_flags(const std::vector<long long>& phi) {
  if (phi.empty())
    throw ValidationError("bad_phi", "--phi is required for this command");
  std::vector<Int> c(phi.begin(), phi.end());
  try {
    return Direction(std::move(c));
  } catch (const ValidationError&) {
    throw ValidationError("bad_phi", "phi must be a nonzero integer tuple");
  }
}

void emit(std::ostream& out, const Json& j, bool human) {
  if (!human) {
    out << j.dump(2) << "\n";
    return;
  }
  // The table view is derived from the JSON, one row per top-level key.
  for (const auto& [key, value] : j.items())
    out << key << "\t" << (value.is_string() ? value.get<std::string>()
                                             : value.dump())
        << "\n";
}

Json groth_result_json(const GrothElement& e) {
  Json j;
  j["element"] = to_json(e);
  if (e.dim() <= 2) {
    const auto rep = as_polytope(e);
    const auto neg_rep = as_polytope(-e);
    j["is_polytope"] = rep.has_value();
    j["polytope"] = rep ? to_json(*rep) : Json(nullptr);
    j["minus_polytope"] = neg_rep ? to_json(*neg_rep) : Json(nullptr);
  }
  return j;
}

struct Options {
  std::string presentation;
  std::string input;
  std::string second_input;
  std::vector<long long> phi;
  std::vector<long long> psi;
  std::string route = "x";
  std::string op;
  std::string matrix;
  std::string svg_path;
  long long k = 1;
  long long chi = 0;
  long long duality_n = 3;
  bool json_flag = false;
  bool human = false;
  bool strict = false;
  bool assert_3manifold = false;
};

Presentation parse_and_validate(const Options& opt) {
  return validate_presentation(load_presentation_text(opt.presentation));
}

void require_nice_cli(const Presentation& p) {
  if (!p.nice())
    throw ValidationError("not_nice",
                          "this command needs a nice presentation "
                          "(nonempty, reduced, cyclically reduced, b1 = 2)");
}

Json run_validate(const Options& opt) {
  return presentation_flags_json(parse_and_validate(opt));
}

Json run_polytope(const Options& opt) {
  const Presentation p = parse_and_validate(opt);
  if (p.b1 == 2) {
    require_nice_cli(p);
    Json j;
    j["b1"] = 2;
    j["polytope"] = to_json(walk_polytope(p));
    return j;
  }
  Json j = groth_result_json(interval_invariant(p));
  j["b1"] = 1;
  return j;
}

Json run_marked(const Options& opt) {
  const Presentation p = parse_and_validate(opt);
  if (p.b1 == 1)
    throw UnsupportedError("markings_b1_1_unsupported",
                           "markings are only defined for b1 = 2");
  require_nice_cli(p);
  Json j;
  j["b1"] = 2;
  j["route"] = opt.route;
  j["marked_polytope"] = to_json(marked_invariant(p, opt.route[0]));
  return j;
}

Json run_bns(const Options& opt) {
  const Presentation p = parse_and_validate(opt);
  return to_json(bns_arcs(p));
}

Json run_bns_member(const Options& opt) {
  const Presentation p = parse_and_validate(opt);
  const Direction phi = phi_from_flags(opt.phi);
  Json j;
  j["phi"] = to_json(phi);
  j["member"] = bns_member(p, phi);
  return j;
}

Json run_thickness(const Options& opt) {
  const Presentation p = parse_and_validate(opt);
  const Direction phi = phi_from_flags(opt.phi);
  const Int t = thickness_of(p, phi);
  Json j;
  j["phi"] = to_json(phi);
  j["thickness"] = t.convert_to<long long>();
  if (opt.assert_3manifold) {
    j["thurston_norm"] = t.convert_to<long long>();
    j["label"] = "Thurston norm x(phi), as asserted by --assert-3manifold";
  }
  return j;
}

Json run_split_complexity(const Options& opt) {
  const Presentation p = parse_and_validate(opt);
  const Direction phi = phi_from_flags(opt.phi);
  const Int c = splitting_complexity(p, phi);
  Json j;
  j["phi"] = to_json(phi);
  j["splitting_complexity"] = c.convert_to<long long>();
  j["thickness"] = (c - 1).convert_to<long long>();
  return j;
}

Json run_thurston(const Options& opt) {
  if (!opt.assert_3manifold)
    throw ValidationError(
        "assert_3manifold_required",
        "the Thurston labeling needs --assert-3manifold; the tool cannot "
        "verify that the group is an admissible 3-manifold group");
  const Presentation p = parse_and_validate(opt);
  Json j;
  j["b1"] = p.b1;
  if (p.b1 == 2) {
    require_nice_cli(p);
    j["thurston_polytope"] = to_json(dilate(walk_polytope(p), 2));
  } else {
    const GrothElement doubled = scale(interval_invariant(p), 2);
    j.update(groth_result_json(doubled));
    j["thurston_polytope"] =
        j["polytope"];  // present exactly when the class is a polytope
  }
  return j;
}

Json run_groth(const Options& opt) {
  const std::string& op = opt.op;
  if (op.empty())
    throw ValidationError("bad_op", "--op is required for groth");
  auto first = [&] { return groth_from_json(load_json_input(opt.input)); };
  auto second = [&] {
    if (opt.second_input.empty())
      throw ValidationError("bad_op", "this op needs a second element");
    return groth_from_json(load_json_input(opt.second_input));
  };

  if (op == "normalize") return groth_result_json(first());
  if (op == "add") return groth_result_json(first() + second());
  if (op == "sub") return groth_result_json(first() - second());
  if (op == "neg") return groth_result_json(-first());
  if (op == "scale") return groth_result_json(scale(first(), opt.k));
  if (op == "mirror") return groth_result_json(mirror(first()));
  if (op == "symmetrize") return groth_result_json(symmetrize_double(first()));
  if (op == "equal") return Json{{"equal", equivalent(first(), second())}};
  if (op == "thickness") {
    const Direction phi = phi_from_flags(opt.phi);
    return Json{{"phi", to_json(phi)},
                {"thickness", thickness(first(), phi).convert_to<long long>()}};
  }
  if (op == "is-polytope") {
    Json j = groth_result_json(first());
    j.erase("element");
    return j;
  }
  if (op == "push") {
    if (opt.matrix.empty())
      throw ValidationError("bad_op", "push needs --matrix");
    return groth_result_json(
        push(first(), matrix_from_json(load_json_input(opt.matrix))));
  }
  if (op == "fibration") {
    const IntMatrix m = opt.matrix.empty()
                            ? IntMatrix::identity(first().dim())
                            : matrix_from_json(load_json_input(opt.matrix));
    return groth_result_json(fibration_scale(first(), m, opt.chi));
  }
  if (op == "amalgam") {
    const Json j = load_json_input(opt.input);
    return groth_result_json(amalgam(
        groth_from_json(j.at("ea")), groth_from_json(j.at("eb")),
        groth_from_json(j.at("ec")), matrix_from_json(j.at("la")),
        matrix_from_json(j.at("lb")), matrix_from_json(j.at("lc"))));
  }
  if (op == "duality")
    return Json{{"n", opt.duality_n},
                {"duality_holds", duality_holds(first(), opt.duality_n)}};
  if (op == "s-equivalent") {
    const Direction phi = phi_from_flags(opt.phi);
    const Direction psi = phi_from_flags(opt.psi);
    return Json{{"phi", to_json(phi)},
                {"psi", to_json(psi)},
                {"s_equivalent", s_equivalent(first(), phi, psi)}};
  }
  throw ValidationError("bad_op", "unknown groth op: " + op);
}

Json run_chain3m(const Options& opt) {
  const ChainComplexData data =
      chain_data_from_json(load_json_input(opt.input));
  const ChainReport report = thurston_from_chain(data, opt.strict);
  Json j;
  j["b1"] = data.b1;
  j["i"] = report.i;
  j["j"] = report.j;
  j["thurston_polytope_class"] = to_json(report.invariant);
  j["is_polytope"] = report.representative.has_value();
  j["representative"] =
      report.representative ? to_json(*report.representative) : Json(nullptr);
  j["duality_holds"] = report.duality_ok;
  j["note"] = kFreeWordNote;
  if (opt.assert_3manifold && !report.duality_ok)
    j["warning"] =
        "input was asserted to be closed-3-manifold data but the "
        "invariant lacks the required mirror symmetry";
  if (opt.strict) {
    Json pairs = Json::array();
    for (const auto& choice : report.strict_results)
      pairs.push_back(Json{{"i", choice.i},
                           {"j", choice.j},
                           {"value", to_json(choice.value)},
                           {"agrees", equivalent(choice.value,
                                                 report.invariant)}});
    Json vanish = Json::array();
    for (const auto& [i, jj] : report.strict_vanishing)
      vanish.push_back(Json::array({i, jj}));
    j["strict"] = Json{{"pairs", pairs},
                       {"vanishing_pairs", vanish},
                       {"all_agree", report.strict_agree}};
  }
  return j;
}

Json run_render(const Options& opt) {
  if (opt.svg_path.empty())
    throw ValidationError("bad_args", "render needs --svg PATH");
  std::string svg;
  if (!opt.input.empty()) {
    const Json j = load_json_input(opt.input);
    if (j.contains("marked"))
      svg = render_svg(marked_from_json(j));
    else
      svg = render_svg(polytope_from_json(j));
  } else if (!opt.presentation.empty()) {
    const Presentation p = parse_and_validate(opt);
    if (p.b1 == 2) {
      svg = render_svg(marked_invariant(p, opt.route[0]));
    } else {
      const auto rep = as_polytope(interval_invariant(p));
      if (!rep)
        throw UnsupportedError("not_a_polytope",
                               "the b1 = 1 invariant is not a polytope; "
                               "nothing to draw");
      svg = render_svg(*rep);
    }
  } else {
    throw ValidationError("bad_args",
                          "render needs a presentation or --in JSON");
  }
  std::ofstream f(opt.svg_path, std::ios::binary);
  if (!f)
    throw ValidationError("io_error", "cannot write " + opt.svg_path);
  f << svg;
  return Json{{"written", opt.svg_path}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out) {
  Options opt;
  CLI::App app{"polytope invariants of two-generator one-relator groups"};
  app.require_subcommand(1);

  auto add_presentation = [&](CLI::App* sub) {
    sub->add_option("presentation", opt.presentation,
                    "presentation text: <x,y|WORD> or WORD ('-' for stdin)")
        ->required();
  };
  auto add_common = [&](CLI::App* sub) {
    sub->add_flag("--json", opt.json_flag, "emit JSON (the default)");
    sub->add_flag("--human", opt.human, "emit a key/value table instead");
  };

  CLI::App* validate = app.add_subcommand("validate", "presentation flags");
  add_presentation(validate);
  add_common(validate);

  CLI::App* polytope =
      app.add_subcommand("polytope", "the invariant polytope (or class)");
  add_presentation(polytope);
  add_common(polytope);

  CLI::App* marked =
      app.add_subcommand("marked", "the marked invariant polytope (b1 = 2)");
  add_presentation(marked);
  add_common(marked);
  marked->add_option("--route", opt.route, "derivative route, x or y")
      ->check(CLI::IsMember({"x", "y"}));

  CLI::App* bns = app.add_subcommand("bns", "BNS arcs of a nice presentation");
  add_presentation(bns);
  add_common(bns);

  CLI::App* bns_member_cmd =
      app.add_subcommand("bns-member", "BNS membership of --phi");
  add_presentation(bns_member_cmd);
  add_common(bns_member_cmd);
  bns_member_cmd->add_option("--phi", opt.phi, "integer covector")
      ->expected(1, 2);

  CLI::App* thick = app.add_subcommand("thickness",
                                       "thickness of the invariant at --phi");
  add_presentation(thick);
  add_common(thick);
  thick->add_option("--phi", opt.phi, "integer covector")->expected(1, 2);
  thick->add_flag("--assert-3manifold", opt.assert_3manifold,
                  "label the result as the Thurston norm");

  CLI::App* thurston = app.add_subcommand(
      "thurston", "Thurston polytope 2*S for asserted 3-manifold groups");
  add_presentation(thurston);
  add_common(thurston);
  thurston->add_flag("--assert-3manifold", opt.assert_3manifold,
                     "assert the group is an admissible 3-manifold group");

  CLI::App* split = app.add_subcommand("split-complexity",
                                       "splitting complexity at --phi");
  add_presentation(split);
  add_common(split);
  split->add_option("--phi", opt.phi, "integer covector")->expected(1, 2);

  CLI::App* groth = app.add_subcommand("groth", "Grothendieck-group calculus");
  add_common(groth);
  groth->add_option("--op", opt.op,
                    "normalize|add|sub|neg|scale|mirror|symmetrize|equal|"
                    "thickness|is-polytope|push|fibration|amalgam|duality|"
                    "s-equivalent")
      ->required();
  groth->add_option("input", opt.input, "element JSON (file, '-', or inline)");
  groth->add_option("second", opt.second_input, "second element when needed");
  groth->add_option("--phi", opt.phi, "integer covector")->expected(1, 3);
  groth->add_option("--psi", opt.psi, "second covector")->expected(1, 3);
  groth->add_option("--k", opt.k, "integer scale");
  groth->add_option("--chi", opt.chi, "Euler characteristic");
  groth->add_option("--n", opt.duality_n, "manifold dimension for duality");
  groth->add_option("--matrix", opt.matrix, "integer matrix JSON");

  CLI::App* chain = app.add_subcommand(
      "chain3m", "Thurston polytope from (1,2,2,1) chain data");
  add_common(chain);
  chain->add_option("input", opt.input, "chain data JSON")->required();
  chain->add_flag("--strict", opt.strict,
                  "evaluate and compare every valid index pair");
  chain->add_flag("--assert-3manifold", opt.assert_3manifold,
                  "warn when the mirror-symmetry check fails");

  CLI::App* render = app.add_subcommand("render", "SVG rendering");
  render->add_option("presentation", opt.presentation,
                     "presentation text (renders its invariant)");
  add_common(render);
  render->add_option("--in", opt.input, "polytope or marked JSON");
  render->add_option("--route", opt.route, "derivative route, x or y")
      ->check(CLI::IsMember({"x", "y"}));
  render->add_option("--svg", opt.svg_path, "output path")->required();

  std::vector<std::string> argv_copy = args;
  try {
    std::vector<const char*> argv;
    argv.push_back("polygroup");
    for (const auto& a : argv_copy) argv.push_back(a.c_str());
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    emit(out, Json{{"error", "usage"}, {"detail", e.what()}}, false);
    return 2;
  }

  try {
    Json result;
    if (*validate) result = run_validate(opt);
    else if (*polytope) result = run_polytope(opt);
    else if (*marked) result = run_marked(opt);
    else if (*bns) result = run_bns(opt);
    else if (*bns_member_cmd) result = run_bns_member(opt);
    else if (*thick) result = run_thickness(opt);
    else if (*thurston) result = run_thurston(opt);
    else if (*split) result = run_split_complexity(opt);
    else if (*groth) result = run_groth(opt);
    else if (*chain) result = run_chain3m(opt);
    else if (*render) result = run_render(opt);
    emit(out, result, opt.human);
    return 0;
  } catch (const ValidationError& e) {
    emit(out, Json{{"error", e.code()}, {"detail", e.what()}}, false);
    return 2;
  } catch (const UnsupportedError& e) {
    emit(out, Json{{"error", e.code()}, {"detail", e.what()}}, false);
    return 3;
  } catch (const DiscrepancyError& e) {
    emit(out, Json{{"error", e.code()}, {"detail", e.what()}}, false);
    return 4;
  }
}

}  // namespace polygroup::cli
