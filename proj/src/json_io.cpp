#include "planebranch/json_io.hpp"

#include <sstream>

namespace planebranch {

namespace {

Json mat_json(const IntMat& m) {
  Json rows = Json::array();
  for (long i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (long j = 0; j < m.cols(); ++j) row.push_back(to_long(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json edges_json(const std::vector<std::pair<int, int>>& edges) {
  Json out = Json::array();
  for (auto [a, b] : edges) out.push_back(Json::array({a, b}));
  return out;
}

Json fate_json(const ComponentFate& f) {
  Json j;
  j["label"] = f.label;
  j["attach"] = f.attach;
  if (f.corner_with != 0) j["corner_with"] = f.corner_with;
  j["meets"] = f.meets;
  return j;
}

}  // namespace

Json to_json(const CharExponents& c) {
  Json j;
  j["char_exponents"] = c.beta;
  j["multiplicity"] = c.multiplicity();
  j["smooth"] = c.is_smooth();
  return j;
}

Json to_json(const PuiseuxPairs& pp) {
  Json arr = Json::array();
  for (auto [m, n] : pp.pairs) arr.push_back(Json::array({m, n}));
  return arr;
}

Json to_json(const Semigroup& s) {
  Json j;
  j["generators"] = s.generators;
  j["conductor"] = conductor(s);
  return j;
}

Json to_json(const BlowupStep& s) {
  Json j;
  j["index"] = s.index;
  j["chart"] = std::string(1, s.chart);
  j["center_divisors"] = s.center_divisors;
  j["strict_multiplicity"] = s.strict_mult;
  j["reduced_total_multiplicity"] = s.reduced_total_mult;
  j["translation"] = to_string(s.translation);
  return j;
}

Json to_json(const ResolutionData& r) {
  Json j;
  j["steps"] = Json::array();
  for (const auto& s : r.steps) j["steps"].push_back(to_json(s));
  j["N"] = r.N();
  j["proximity"] = mat_json(r.proximity);
  j["proximity_inverse"] = mat_json(r.proximity_inverse);
  j["intersection"] = mat_json(r.intersection);
  j["intersection_convention"] = r.intersection_convention;
  j["self_intersections"] = r.self_intersections;
  j["dual_edges"] = edges_json(r.dual_edges);
  j["n_row"] = r.n_row;
  j["final_attach"] = r.final_attach;
  return j;
}

Json to_json(const DimensionReport& d) {
  Json j;
  j["N"] = d.N;
  j["reduced_total_multiplicities"] = d.reduced_total;
  j["sigma_values"] = d.sigma_values;
  j["dimension"] = d.total;
  j["rigid"] = d.rigid;
  return j;
}

Json to_json(const DeltaPData& dp) {
  Json j;
  j["delta"] = dp.delta;
  j["v"] = dp.v;
  j["p"] = dp.p;
  j["component_fates"] = Json::array();
  for (const auto& f : dp.fates) j["component_fates"].push_back(fate_json(f));
  return j;
}

Json to_json(const PropertyReport& pr) {
  Json j;
  j["prop1_ok"] = pr.prop1_ok;
  Json mo = Json::array();
  for (const auto& w : pr.minus_ones) {
    Json e;
    e["index"] = w.index;
    e["case"] = std::string(1, w.case_tag);
    mo.push_back(std::move(e));
  }
  j["minus_ones"] = std::move(mo);
  j["prop2_ok"] = pr.prop2_ok;
  j["bad_adjacent"] = edges_json(pr.bad_adjacent);
  j["prop3_ok"] = pr.prop3_ok;
  Json comps = Json::array();
  for (const auto& c : pr.components) {
    Json e;
    e["vertices"] = c.vertices;
    e["witness"] = c.witness;
    e["witness_kind"] = c.witness_kind;
    comps.push_back(std::move(e));
  }
  j["pruned_components"] = std::move(comps);
  j["all_ok"] = pr.all_ok();
  return j;
}

Json to_json(const NumberedDualTree& t) {
  Json j;
  j["N"] = t.N;
  Json nums = Json::array();
  for (const auto& n : t.numbers) {
    if (n.infinite)
      nums.push_back("inf");
    else
      nums.push_back(n.value);
  }
  j["numbers"] = std::move(nums);
  j["edges"] = edges_json(t.edges);
  j["curve_attach"] = t.curve_attach;
  j["last_dicritical"] = t.last_dicritical;
  j["direction_attach"] = Json::array();
  for (const auto& f : t.direction_attach) j["direction_attach"].push_back(fate_json(f));
  return j;
}

Json to_json(const FoliationIdentity& id) {
  Json j;
  j["lhs"] = id.lhs;
  j["rhs"] = id.rhs;
  j["equal"] = id.equal;
  return j;
}

Json to_json(const OneForm& w) {
  Json j;
  j["A"] = w.assembled_A().str();
  j["B"] = w.assembled_B().str();
  j["form"] = w.str();
  Json conv;
  conv["x_factor"] = w.x_factor;
  conv["y_factor"] = w.y_factor;
  j["convention"] = std::move(conv);
  return j;
}

Json to_json(const SaitoResult& r) {
  Json j;
  j["nu_min"] = r.nu_min;
  j["certificate"] = to_json(r.certificate);
  j["route"] = r.route;
  j["degree_bound"] = r.degree_bound_used;
  if (r.jet_order_used > 0) j["jet_order"] = r.jet_order_used;
  j["stability_checked"] = r.stability_checked;
  if (r.stability_checked) j["stable"] = r.stable;
  return j;
}

Json to_json(const CriterionReport& r) {
  Json j;
  j["omega1_tangent"] = r.omega1_tangent;
  j["omega2_tangent"] = r.omega2_tangent;
  if (r.wedge_valuation)
    j["wedge_valuation"] = *r.wedge_valuation;
  else
    j["wedge_valuation"] = nullptr;
  j["expected_valuation"] = r.expected_valuation;
  j["valuation_ok"] = r.valuation_ok;
  j["divides"] = r.divides;
  j["unit"] = r.unit;
  if (r.divides) j["u"] = r.u_str;
  j["is_basis"] = r.is_basis;
  return j;
}

Json to_json(const GenericReport& r) {
  Json j;
  j["char_exponents"] = r.char_exponents;
  j["direction"] = r.direction;
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json e;
    e["seed"] = c.seed;
    e["expected"] = c.expected;
    e["got"] = c.got;
    e["match"] = c.match;
    e["stable"] = c.stable;
    checks.push_back(std::move(e));
  }
  j["checks"] = std::move(checks);
  j["all_match"] = r.all_match;
  return j;
}

Json to_json(const RigidityEntry& e) {
  Json j;
  j["char_exponents"] = e.char_exps.beta;
  j["semigroup"] = e.semigroup.generators;
  j["dimension"] = e.dimension;
  j["rigid"] = e.rigid;
  return j;
}

std::string dot_dual_graph(const ResolutionData& r) {
  std::ostringstream os;
  os << "graph dual {\n  node [shape=circle];\n";
  for (long i = 1; i <= r.N(); ++i)
    os << "  D" << i << " [label=\"D" << i << "\\n(" << r.self_intersections[i - 1]
       << ")\"];\n";
  for (auto [a, b] : r.dual_edges) os << "  D" << a << " -- D" << b << ";\n";
  if (r.N() > 0) {
    os << "  S [shape=plaintext, label=\"S\"];\n";
    os << "  S -- D" << r.final_attach << " [style=dashed];\n";
  }
  os << "}\n";
  return os.str();
}

std::string dot_numbered_tree(const NumberedDualTree& t) {
  std::ostringstream os;
  os << "graph numbered_tree {\n  node [shape=circle];\n";
  for (long i = 1; i <= t.N; ++i) {
    const auto& n = t.numbers[i - 1];
    os << "  D" << i << " [label=\"D" << i << "\\n";
    if (n.infinite)
      os << "inf";
    else
      os << n.value;
    os << "\"";
    if (i == t.N && t.last_dicritical) os << ", peripheries=2";
    os << "];\n";
  }
  for (auto [a, b] : t.edges) os << "  D" << a << " -- D" << b << ";\n";
  if (t.N > 0) {
    os << "  S [shape=plaintext, label=\"S\"];\n";
    os << "  S -- D" << t.curve_attach << " [style=dashed];\n";
  }
  int k = 0;
  for (const auto& f : t.direction_attach) {
    std::string id = "d" + std::to_string(k++);
    os << "  " << id << " [shape=plaintext, label=\"" << f.label << "\"];\n";
    os << "  " << id << " -- D" << f.attach << " [style=dotted];\n";
    if (f.corner_with != 0)
      os << "  " << id << " -- D" << f.corner_with << " [style=dotted];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace planebranch
