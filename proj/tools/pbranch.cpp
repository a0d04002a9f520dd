// pbranch — exact invariants of irreducible plane curve germs.
//
// Subcommands:
//   invariants  characteristic exponents, semigroup, conductor, Puiseux pairs
//   resolve     blow-up record: proximity/intersection matrices, dual graph
//   dim         generic dimension of the moduli space of the topological class
//   tree        delta-sequence, p-vector, numbered dual tree of the auxiliary
//               foliation attached to a direction
//   saito       minimal valuation in the module of 1-forms tangent to the
//               curve (plus direction), generic-class verification, and the
//               two-form basis criterion
//   rigid       enumerate topological classes and classify rigidity
//
// All output is JSON on stdout (or --out FILE); DOT graphs go to --dot FILE
// ("-" = stdout). Input errors exit 2, math/precision errors 3, exhausted
// search bounds 4.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "planebranch/curve.hpp"
#include "planebranch/direction.hpp"
#include "planebranch/errors.hpp"
#include "planebranch/json_io.hpp"
#include "planebranch/moduli.hpp"
#include "planebranch/parse.hpp"
#include "planebranch/poly2.hpp"
#include "planebranch/resolution.hpp"
#include "planebranch/saito.hpp"
#include "planebranch/version.hpp"

namespace pb = planebranch;

namespace {

struct CurveOpts {
  std::string param;
  std::string equation;
  std::string chars;
  std::string pairs;
  std::string semigroup;
  std::uint64_t seed = 1;
  long trunc = 0;

  int sources() const {
    return !param.empty() + !equation.empty() + !chars.empty() + !pairs.empty() +
           !semigroup.empty();
  }
};

struct DirOpts {
  std::string direction = "none";
  std::vector<std::string> components;
};

struct OutOpts {
  std::string out;
  std::string dot;
};

void add_curve_opts(CLI::App* cmd, CurveOpts& c, bool with_generic = true) {
  cmd->add_option("--param", c.param,
                  "parametrization, e.g. \"x=t^8; y=t^20+t^30+t^35\"");
  cmd->add_option("--equation", c.equation, "polynomial equation, e.g. \"y^6-x^7\"");
  cmd->add_option("--char", c.chars, "characteristic exponents, e.g. \"8,20,30,35\"");
  cmd->add_option("--pairs", c.pairs, "Puiseux pairs, e.g. \"(2,5),(2,15),(2,35)\"");
  cmd->add_option("--semigroup", c.semigroup, "semigroup generators, e.g. \"8,20,50,105\"");
  if (with_generic) {
    cmd->add_option("--seed", c.seed, "seed for the generic member of a class [1]");
    cmd->add_option("--trunc", c.trunc,
                    "generation window for generic members [conductor + 2*mult]");
  }
}

void add_dir_opts(CLI::App* cmd, DirOpts& d) {
  cmd->add_option("--direction", d.direction, "axis components: none, x, y, or xy [none]")
      ->check(CLI::IsMember({"none", "x", "y", "xy"}));
  cmd->add_option("--direction-param", d.components,
                  "smooth component as a parametrization (repeatable)");
}

void add_out_opts(CLI::App* cmd, OutOpts& o, bool with_dot) {
  cmd->add_option("--out", o.out, "write the JSON report to FILE [stdout]");
  if (with_dot) cmd->add_option("--dot", o.dot, "write a DOT graph to FILE (\"-\" = stdout)");
}

// The equation path only covers two-term equations c1*y^a + c2*x^b with
// coefficient ratio -c2/c1 in {1, -1 (a odd)}: exactly the shapes with an
// exact one-term Puiseux parametrization. Anything else needs --param.
pb::Parametrization parametrize_two_term(const pb::Poly2& f) {
  const auto& terms = f.terms();
  if (terms.size() != 2)
    throw pb::MathError(
        "only two-term equations are auto-parametrized; give --param instead");
  long a = -1, b = -1;
  pb::Rat cy, cx;
  for (const auto& [m, c] : terms) {
    if (m.first == 0 && m.second > 0) {
      a = m.second;
      cy = c;
    } else if (m.second == 0 && m.first > 0) {
      b = m.first;
      cx = c;
    }
  }
  if (a < 0 || b < 0)
    throw pb::MathError(
        "auto-parametrization needs the shape c1*y^a + c2*x^b; give --param instead");
  if (std::gcd(a, b) != 1)
    throw pb::MathError("equation is not irreducible: gcd of the exponents exceeds 1");
  pb::Rat ratio = -cx / cy;  // y^a = ratio * x^b
  pb::Rat rho;
  if (ratio == 1)
    rho = 1;
  else if (ratio == -1 && a % 2 == 1)
    rho = -1;
  else
    throw pb::MathError(
        "no rational parametrization for this coefficient ratio; give --param instead");
  return pb::convert_to_normal(a, pb::Series::monomial(b, rho));
}

struct CurveInput {
  pb::Parametrization par;
  pb::Json echo;  // what was read, plus seed/trunc when a generic member was drawn
};

pb::CharExponents class_of(const CurveOpts& c) {
  if (!c.chars.empty()) return pb::make_char_exponents(pb::parse_long_list(c.chars));
  if (!c.pairs.empty()) return pb::char_from_pairs({pb::parse_pair_list(c.pairs)});
  if (!c.semigroup.empty()) return pb::char_from_semigroup({pb::parse_long_list(c.semigroup)});
  throw pb::MathError("internal: class_of called without class data");
}

CurveInput make_curve(const CurveOpts& c) {
  if (c.sources() != 1)
    throw pb::MathError(
        "give exactly one of --param, --equation, --char, --pairs, --semigroup");
  CurveInput in;
  if (!c.param.empty()) {
    in.par = pb::parse_parametrization(c.param);
    in.echo["param"] = c.param;
  } else if (!c.equation.empty()) {
    in.par = parametrize_two_term(pb::parse_poly(c.equation));
    in.echo["equation"] = c.equation;
  } else {
    pb::CharExponents cls = class_of(c);
    in.par = pb::generic_parametrization(cls, c.seed, c.trunc);
    if (!c.chars.empty()) in.echo["char"] = c.chars;
    if (!c.pairs.empty()) in.echo["pairs"] = c.pairs;
    if (!c.semigroup.empty()) in.echo["semigroup"] = c.semigroup;
    in.echo["seed"] = c.seed;
    if (c.trunc > 0) in.echo["trunc"] = c.trunc;
  }
  return in;
}

pb::Direction make_dir(const DirOpts& d) {
  std::vector<pb::DirComponent> comps;
  if (d.direction == "x" || d.direction == "xy") comps.push_back(pb::DirComponent::axis_x());
  if (d.direction == "y" || d.direction == "xy") comps.push_back(pb::DirComponent::axis_y());
  int k = 0;
  for (const auto& text : d.components) {
    auto [sx, sy] = pb::parse_param_pair(text);
    comps.push_back(pb::DirComponent::curve(sx, sy, "component " + std::to_string(++k)));
  }
  return pb::make_direction(comps);
}

pb::Json envelope(const std::string& command, pb::Json input) {
  pb::Json j;
  j["tool"] = "pbranch";
  j["version"] = pb::kVersion;
  j["command"] = command;
  j["input"] = std::move(input);
  return j;
}

void emit(const pb::Json& j, const OutOpts& o) {
  if (o.out.empty()) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::ofstream f(o.out);
    if (!f) throw pb::MathError("cannot open output file: " + o.out);
    f << j.dump(2) << "\n";
  }
}

void emit_dot(const std::string& dot, const std::string& path) {
  if (path.empty()) return;
  if (path == "-") {
    std::cout << dot;
  } else {
    std::ofstream f(path);
    if (!f) throw pb::MathError("cannot open output file: " + path);
    f << dot;
  }
}

// --- subcommand bodies -------------------------------------------------------

void run_invariants(const CurveOpts& copt, const OutOpts& oopt) {
  CurveInput in = make_curve(copt);
  pb::CharExponents c = pb::char_exponents(in.par);
  pb::Json j = envelope("invariants", in.echo);
  pb::Json r;
  r["char_exponents"] = c.beta;
  r["multiplicity"] = c.multiplicity();
  r["smooth"] = c.is_smooth();
  if (!c.is_smooth()) {
    pb::Semigroup s = pb::semigroup_from_char(c);
    r["semigroup"] = s.generators;
    r["conductor"] = pb::conductor(s);
    r["puiseux_pairs"] = pb::to_json(pb::puiseux_pairs(c));
  } else {
    r["semigroup"] = pb::Json::array({1});
    r["conductor"] = 0;
    r["puiseux_pairs"] = pb::Json::array();
  }
  j["result"] = std::move(r);
  emit(j, oopt);
}

void run_resolve(const CurveOpts& copt, const OutOpts& oopt) {
  CurveInput in = make_curve(copt);
  pb::ResolutionData r = pb::resolve(in.par);
  pb::Json j = envelope("resolve", in.echo);
  j["result"] = pb::to_json(r);
  emit(j, oopt);
  emit_dot(pb::dot_dual_graph(r), oopt.dot);
}

void run_dim(const CurveOpts& copt, const OutOpts& oopt) {
  CurveInput in = make_curve(copt);
  pb::DimensionReport d = pb::generic_dimension(pb::resolve(in.par));
  pb::Json j = envelope("dim", in.echo);
  j["result"] = pb::to_json(d);
  emit(j, oopt);
}

void run_tree(const CurveOpts& copt, const DirOpts& dopt, const OutOpts& oopt) {
  CurveInput in = make_curve(copt);
  pb::Direction d = make_dir(dopt);
  pb::Trace tr = pb::resolve_trace(in.par);
  pb::DeltaPData dp = pb::delta_p_data(tr.data, d);
  pb::NumberedDualTree tree = pb::numbered_dual_tree(tr.data, dp);
  pb::PropertyReport props = pb::check_combinatorial_properties(tr, d, dp);
  pb::FoliationIdentity id = pb::foliation_mult_identity(tr.data, dp);
  pb::Json input = in.echo;
  input["direction"] = d.describe();
  pb::Json j = envelope("tree", std::move(input));
  pb::Json r;
  r["delta_p"] = pb::to_json(dp);
  r["tree"] = pb::to_json(tree);
  r["properties"] = pb::to_json(props);
  r["identity"] = pb::to_json(id);
  j["result"] = std::move(r);
  emit(j, oopt);
  emit_dot(pb::dot_numbered_tree(tree), oopt.dot);
}

struct SaitoOpts {
  long degree_bound = 0;
  long jet_order = 0;
  bool check_stability = false;
  bool generic = false;
  long seeds = 5;
  bool basis_check = false;
  std::string w1a, w1b, w2a, w2b;
  bool omega2_df = false;
};

void run_saito(const CurveOpts& copt, const DirOpts& dopt, const SaitoOpts& sopt,
               const OutOpts& oopt) {
  pb::Direction d = make_dir(dopt);
  pb::SaitoOptions opt;
  opt.degree_bound = sopt.degree_bound;
  opt.jet_order = sopt.jet_order;
  opt.check_stability = sopt.check_stability;

  if (sopt.basis_check) {
    if (copt.equation.empty())
      throw pb::MathError("--basis-check needs the curve as --equation");
    if (sopt.w1a.empty() || sopt.w1b.empty())
      throw pb::MathError("--basis-check needs --omega1-a and --omega1-b");
    if (!sopt.omega2_df && (sopt.w2a.empty() || sopt.w2b.empty()))
      throw pb::MathError("--basis-check needs --omega2-a/--omega2-b or --omega2-df");
    pb::Poly2 f = pb::parse_poly(copt.equation);
    pb::OneForm w1{pb::parse_poly(sopt.w1a), pb::parse_poly(sopt.w1b)};
    pb::OneForm w2;
    if (sopt.omega2_df)
      w2 = pb::OneForm{f.diff_x(), f.diff_y()};
    else
      w2 = pb::OneForm{pb::parse_poly(sopt.w2a), pb::parse_poly(sopt.w2b)};
    pb::CriterionReport rep = pb::check_saito_criterion(w1, w2, f, d);
    pb::Json input;
    input["equation"] = copt.equation;
    input["direction"] = d.describe();
    input["omega1"] = w1.str();
    input["omega2"] = sopt.omega2_df ? "d(" + copt.equation + ")" : w2.str();
    pb::Json j = envelope("saito", std::move(input));
    j["result"] = pb::to_json(rep);
    emit(j, oopt);
    return;
  }

  if (sopt.generic) {
    if (copt.chars.empty() && copt.pairs.empty() && copt.semigroup.empty())
      throw pb::MathError("--generic needs the class: --char, --pairs, or --semigroup");
    pb::CharExponents cls = class_of(copt);
    std::vector<std::uint64_t> seeds;
    for (long s = 1; s <= sopt.seeds; ++s) seeds.push_back(copt.seed + s - 1);
    pb::GenericReport rep = pb::verify_generic_minimum(cls, d, seeds, opt);
    pb::Json input;
    if (!copt.chars.empty()) input["char"] = copt.chars;
    if (!copt.pairs.empty()) input["pairs"] = copt.pairs;
    if (!copt.semigroup.empty()) input["semigroup"] = copt.semigroup;
    input["direction"] = d.describe();
    input["seeds"] = sopt.seeds;
    input["first_seed"] = copt.seed;
    pb::Json j = envelope("saito", std::move(input));
    j["result"] = pb::to_json(rep);
    emit(j, oopt);
    return;
  }

  if (!copt.equation.empty()) {
    pb::Poly2 f = pb::parse_poly(copt.equation);
    pb::SaitoResult res = pb::min_saito_valuation(f, d, opt);
    pb::Json input;
    input["equation"] = copt.equation;
    input["direction"] = d.describe();
    pb::Json j = envelope("saito", std::move(input));
    j["result"] = pb::to_json(res);
    emit(j, oopt);
    return;
  }

  CurveInput in = make_curve(copt);
  pb::SaitoResult res = pb::min_saito_valuation(in.par, d, opt);
  pb::Json input = in.echo;
  input["direction"] = d.describe();
  pb::Json j = envelope("saito", std::move(input));
  j["result"] = pb::to_json(res);
  emit(j, oopt);
}

void run_rigid(long max_mult, long bound, const OutOpts& oopt) {
  auto entries = pb::classify_rigidity(max_mult, bound);
  pb::Json input;
  input["max_mult"] = max_mult;
  input["bound"] = bound;
  pb::Json j = envelope("rigid", std::move(input));
  pb::Json arr = pb::Json::array();
  long n_rigid = 0;
  for (const auto& e : entries) {
    arr.push_back(pb::to_json(e));
    n_rigid += e.rigid;
  }
  pb::Json r;
  r["classes"] = std::move(arr);
  r["count"] = static_cast<long>(entries.size());
  r["rigid_count"] = n_rigid;
  j["result"] = std::move(r);
  emit(j, oopt);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact invariants of irreducible plane curve germs"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(pb::kVersion));

  CurveOpts copt;
  DirOpts dopt;
  OutOpts oopt;
  SaitoOpts sopt;
  long max_mult = 4, bound = 40;

  auto* inv = app.add_subcommand("invariants", "characteristic data of the curve");
  add_curve_opts(inv, copt);
  add_out_opts(inv, oopt, false);

  auto* res = app.add_subcommand("resolve", "blow-up combinatorics of the resolution");
  add_curve_opts(res, copt);
  add_out_opts(res, oopt, true);

  auto* dim = app.add_subcommand("dim", "generic dimension of the moduli space");
  add_curve_opts(dim, copt);
  add_out_opts(dim, oopt, false);

  auto* tree = app.add_subcommand("tree", "auxiliary-foliation combinatorics for a direction");
  add_curve_opts(tree, copt);
  add_dir_opts(tree, dopt);
  add_out_opts(tree, oopt, true);

  auto* saito = app.add_subcommand("saito", "minimal valuation of tangent 1-forms");
  add_curve_opts(saito, copt);
  add_dir_opts(saito, dopt);
  add_out_opts(saito, oopt, false);
  saito->add_option("--degree-bound", sopt.degree_bound,
                    "coefficient degree bound [route default]");
  saito->add_option("--jet-order", sopt.jet_order,
                    "pullback jet order, parametrization route [conductor + 2*degree bound]");
  saito->add_flag("--check-stability", sopt.check_stability,
                  "re-run with doubled bounds and compare");
  saito->add_flag("--generic", sopt.generic,
                  "verify the generic minimum over seeded class members");
  saito->add_option("--seeds", sopt.seeds, "number of seeds for --generic [5]");
  saito->add_flag("--basis-check", sopt.basis_check,
                  "run the two-form basis criterion instead of the minimum");
  saito->add_option("--omega1-a", sopt.w1a, "dx coefficient of the first form");
  saito->add_option("--omega1-b", sopt.w1b, "dy coefficient of the first form");
  saito->add_option("--omega2-a", sopt.w2a, "dx coefficient of the second form");
  saito->add_option("--omega2-b", sopt.w2b, "dy coefficient of the second form");
  saito->add_flag("--omega2-df", sopt.omega2_df,
                  "use the differential of the curve equation as the second form");

  auto* rigid = app.add_subcommand("rigid", "classify rigidity of topological classes");
  rigid->add_option("--max-mult", max_mult, "largest multiplicity to enumerate [4]");
  rigid->add_option("--bound", bound, "bound on the semigroup generators [40]");
  add_out_opts(rigid, oopt, false);

  CLI11_PARSE(app, argc, argv);

  try {
    if (inv->parsed()) run_invariants(copt, oopt);
    if (res->parsed()) run_resolve(copt, oopt);
    if (dim->parsed()) run_dim(copt, oopt);
    if (tree->parsed()) run_tree(copt, dopt, oopt);
    if (saito->parsed()) run_saito(copt, dopt, sopt, oopt);
    if (rigid->parsed()) run_rigid(max_mult, bound, oopt);
  } catch (const pb::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const pb::BoundError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const pb::MathError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
