// Python bindings. Thin wrappers over the C++ API: inputs are plain strings
// and integers, outputs are Python dicts/lists obtained by converting the
// stable JSON reports. Exceptions map to ValueError (parse/math) and
// RuntimeError (exhausted bounds).

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
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

namespace py = pybind11;
namespace pb = planebranch;

namespace {

py::object to_py(const pb::Json& j) {
  py::object loads = py::module_::import("json").attr("loads");
  return loads(j.dump());
}

pb::Parametrization curve_from(const std::string& param, const std::vector<long>& chars,
                               std::uint64_t seed) {
  if (!param.empty() && !chars.empty())
    throw pb::MathError("give either a parametrization or characteristic exponents, not both");
  if (!param.empty()) return pb::parse_parametrization(param);
  if (!chars.empty())
    return pb::generic_parametrization(pb::make_char_exponents(chars), seed);
  throw pb::MathError("no curve given");
}

pb::Direction direction_from(const std::string& name) {
  if (name.empty() || name == "none") return pb::Direction::none();
  if (name == "x") return pb::Direction::axis_x();
  if (name == "y") return pb::Direction::axis_y();
  if (name == "xy") return pb::Direction::axes_xy();
  throw pb::MathError("unknown direction: " + name + " (use none, x, y, xy)");
}

}  // namespace

PYBIND11_MODULE(planebranch, m) {
  m.doc() =
      "Exact invariants of irreducible plane curve germs: characteristic "
      "exponents, resolution combinatorics, generic moduli dimension, and the "
      "minimal valuation of tangent 1-forms.";
  m.attr("__version__") = std::string(pb::kVersion);

  py::register_exception<pb::ParseError>(m, "InputError", PyExc_ValueError);
  py::register_exception<pb::MathError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<pb::BoundError>(m, "SearchBoundError", PyExc_RuntimeError);

  m.def(
      "invariants",
      [](const std::string& param, const std::vector<long>& chars) {
        pb::CharExponents c = param.empty() && !chars.empty()
                                  ? pb::make_char_exponents(chars)
                                  : pb::char_exponents(pb::parse_parametrization(param));
        pb::Json j;
        j["char_exponents"] = pb::to_json(c)["char_exponents"];
        pb::Semigroup s = pb::semigroup_from_char(c);
        j["semigroup"] = pb::to_json(s)["generators"];
        j["conductor"] = pb::conductor(s);
        j["puiseux_pairs"] = pb::to_json(pb::puiseux_pairs(c));
        return to_py(j);
      },
      py::arg("param") = std::string(), py::arg("chars") = std::vector<long>{},
      "Characteristic exponents, semigroup, conductor and Puiseux pairs of a "
      "curve given as a parametrization string or as exponents.");

  m.def(
      "resolve",
      [](const std::string& param, const std::vector<long>& chars, std::uint64_t seed) {
        return to_py(pb::to_json(pb::resolve(curve_from(param, chars, seed))));
      },
      py::arg("param") = std::string(), py::arg("chars") = std::vector<long>{},
      py::arg("seed") = 1,
      "Blow-up record of the minimal resolution: steps, proximity matrix and "
      "inverse, intersection matrix, dual graph.");

  m.def(
      "dimension",
      [](const std::string& param, const std::vector<long>& chars, std::uint64_t seed) {
        return to_py(
            pb::to_json(pb::generic_dimension(pb::resolve(curve_from(param, chars, seed)))));
      },
      py::arg("param") = std::string(), py::arg("chars") = std::vector<long>{},
      py::arg("seed") = 1,
      "Generic dimension of the moduli space of the curve's topological class.");

  m.def(
      "tree",
      [](const std::string& param, const std::vector<long>& chars,
         const std::string& direction, std::uint64_t seed) {
        pb::Direction d = direction_from(direction);
        pb::Trace tr = pb::resolve_trace(curve_from(param, chars, seed));
        pb::DeltaPData dp = pb::delta_p_data(tr.data, d);
        pb::Json j;
        j["delta_p"] = pb::to_json(dp);
        j["tree"] = pb::to_json(pb::numbered_dual_tree(tr.data, dp));
        j["properties"] = pb::to_json(pb::check_combinatorial_properties(tr, d, dp));
        j["identity"] = pb::to_json(pb::foliation_mult_identity(tr.data, dp));
        return to_py(j);
      },
      py::arg("param") = std::string(), py::arg("chars") = std::vector<long>{},
      py::arg("direction") = "none", py::arg("seed") = 1,
      "Delta-sequence, p-vector, structural checks and the numbered dual tree "
      "for a direction (none, x, y, xy).");

  m.def(
      "min_saito_valuation",
      [](const std::string& equation, const std::string& param,
         const std::string& direction, long degree_bound, long jet_order,
         bool check_stability) {
        pb::Direction d = direction_from(direction);
        pb::SaitoOptions opt;
        opt.degree_bound = degree_bound;
        opt.jet_order = jet_order;
        opt.check_stability = check_stability;
        if (!equation.empty() && !param.empty())
          throw pb::MathError("give either an equation or a parametrization, not both");
        if (!equation.empty())
          return to_py(pb::to_json(pb::min_saito_valuation(pb::parse_poly(equation), d, opt)));
        if (!param.empty())
          return to_py(
              pb::to_json(pb::min_saito_valuation(pb::parse_parametrization(param), d, opt)));
        throw pb::MathError("no curve given");
      },
      py::arg("equation") = std::string(), py::arg("param") = std::string(),
      py::arg("direction") = "none", py::arg("degree_bound") = 0, py::arg("jet_order") = 0,
      py::arg("check_stability") = false,
      "Minimal valuation over 1-forms tangent to the curve (plus direction), "
      "with the certificate form.");

  m.def(
      "verify_generic_minimum",
      [](const std::vector<long>& chars, const std::string& direction,
         const std::vector<std::uint64_t>& seeds) {
        return to_py(pb::to_json(pb::verify_generic_minimum(
            pb::make_char_exponents(chars), direction_from(direction), seeds)));
      },
      py::arg("chars"), py::arg("direction") = "none",
      py::arg("seeds") = std::vector<std::uint64_t>{1, 2, 3, 4, 5},
      "Check floor(nu/2) on seeded generic members of a class.");

  m.def(
      "classify_rigidity",
      [](long max_mult, long generator_bound) {
        pb::Json arr = pb::Json::array();
        for (const auto& e : pb::classify_rigidity(max_mult, generator_bound))
          arr.push_back(pb::to_json(e));
        return to_py(arr);
      },
      py::arg("max_mult") = 4, py::arg("generator_bound") = 40,
      "Enumerate topological classes and report the generic moduli dimension "
      "and rigidity of each.");

  m.def(
      "sigma", &pb::sigma, py::arg("k"),
      "Per-center contribution to the moduli dimension.");

  m.def(
      "dot_dual_graph",
      [](const std::string& param, const std::vector<long>& chars, std::uint64_t seed) {
        return pb::dot_dual_graph(pb::resolve(curve_from(param, chars, seed)));
      },
      py::arg("param") = std::string(), py::arg("chars") = std::vector<long>{},
      py::arg("seed") = 1, "DOT rendering of the dual graph of the resolution.");
}
