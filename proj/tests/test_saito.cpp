#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "planebranch/curve.hpp"
#include "planebranch/direction.hpp"
#include "planebranch/parse.hpp"
#include "planebranch/resolution.hpp"
#include "planebranch/saito.hpp"

using namespace planebranch;

namespace {

Parametrization monomial_curve(long p, long q) {
  Parametrization par;
  par.p = p;
  par.y = Series::monomial(q, Rat(1));
  return par;
}

Direction two_lines() {
  // y = 2x and y = 3x: smooth, transverse to each other and to any curve in
  // normal form (whose tangent is the x-axis)
  Series s = Series::monomial(1, Rat(1));
  return make_direction({DirComponent::curve(s, s * Rat(2), "y=2x"),
                         DirComponent::curve(s, s * Rat(3), "y=3x")});
}

}  // namespace

TEST_CASE("direction validation") {
  Series s = Series::monomial(1, Rat(1));
  CHECK(Direction::none().describe() == "none");
  CHECK(Direction::axes_xy().describe() == "xy");
  CHECK(Direction::axes_xy().axes_only());

  // a singular component is rejected
  CHECK_THROWS_AS(
      make_direction({DirComponent::curve(Series::monomial(2, Rat(1)),
                                          Series::monomial(3, Rat(1)), "cusp")}),
      MathError);
  // two components sharing a tangent are rejected
  CHECK_THROWS_AS(
      make_direction({DirComponent::curve(s, Series::monomial(2, Rat(1)), "a"),
                      DirComponent::curve(s, -Series::monomial(2, Rat(1)), "b")}),
      MathError);
  // three components are rejected
  CHECK_THROWS_AS(make_direction({DirComponent::axis_x(), DirComponent::axis_y(),
                                  DirComponent::curve(s, s, "diag")}),
                  MathError);
}

TEST_CASE("delta and p for the cusp under all axis directions") {
  Trace tr = resolve_trace(monomial_curve(2, 3));
  const ResolutionData& r = tr.data;

  DeltaPData none = delta_p_data(r, Direction::none());
  CHECK(none.delta == std::vector<long>{0, 1, 2});
  CHECK(none.v == std::vector<long>{2, 1, 0});
  CHECK(none.p == std::vector<long>{1, 1, 0});

  DeltaPData dx = delta_p_data(r, Direction::axis_x());
  CHECK(dx.delta == std::vector<long>{1, 1, 2});
  CHECK(dx.p == std::vector<long>{0, 1, 0});
  REQUIRE(dx.fates.size() == 1);
  CHECK(dx.fates[0].attach == 1);
  CHECK(dx.fates[0].corner_with == 0);
  CHECK(dx.fates[0].meets == std::vector<int>{1});

  DeltaPData dy = delta_p_data(r, Direction::axis_y());
  CHECK(dy.delta == std::vector<long>{1, 2, 2});
  CHECK(dy.p == std::vector<long>{1, 0, 0});
  CHECK(dy.fates[0].attach == 2);  // the tangent axis survives one step longer

  DeltaPData dxy = delta_p_data(r, Direction::axes_xy());
  CHECK(dxy.delta == std::vector<long>{2, 2, 2});
  CHECK(dxy.p == std::vector<long>{1, 0, 0});
}

TEST_CASE("delta and p for (5,13)") {
  Trace tr = resolve_trace(monomial_curve(5, 13));
  DeltaPData none = delta_p_data(tr.data, Direction::none());
  CHECK(none.delta == std::vector<long>{0, 1, 1, 2, 2, 2});
  CHECK(none.v == std::vector<long>{3, 3, 2, 1, 0, 0});
  CHECK(none.p == std::vector<long>{0, 0, 1, 1, 0, 0});

  DeltaPData dxy = delta_p_data(tr.data, Direction::axes_xy());
  CHECK(dxy.delta == std::vector<long>{2, 2, 2, 2, 2, 2});
  CHECK(dxy.v == std::vector<long>{2, 2, 1, 1, 0, 0});
  CHECK(dxy.p == std::vector<long>{0, 0, 0, 1, 0, 0});
  // {y=0} is the curve's tangent line: it survives to the third center
  REQUIRE(dxy.fates.size() == 2);
  CHECK(dxy.fates[0].attach == 1);
  CHECK(dxy.fates[1].attach == 3);
}

TEST_CASE("a custom tangent component tracked through the replay") {
  // (2,5) with d = {y = x^2, x = 0}: the parabola shares the curve's tangent
  // and separates only at the second center
  Trace tr = resolve_trace(monomial_curve(2, 5));
  Series s = Series::monomial(1, Rat(1));
  Direction d = make_direction({DirComponent::curve(s, Series::monomial(2, Rat(1)), "parabola"),
                                DirComponent::axis_x()});
  DeltaPData dp = delta_p_data(tr.data, d);
  CHECK(dp.delta == std::vector<long>{2, 2, 1, 2});
  CHECK(dp.p == std::vector<long>{0, 0, 1, 0});
  CHECK(dp.fates[0].attach == 2);
  CHECK(dp.fates[1].attach == 1);
}

TEST_CASE("p_N vanishes in every configuration") {
  for (auto [p, q] : std::vector<std::pair<long, long>>{{2, 3}, {2, 5}, {5, 8}, {5, 13}}) {
    Trace tr = resolve_trace(monomial_curve(p, q));
    for (const Direction& d : {Direction::none(), Direction::axis_x(),
                               Direction::axis_y(), Direction::axes_xy(), two_lines()}) {
      DeltaPData dp = delta_p_data(tr.data, d);
      CHECK(dp.p.back() == 0);
    }
  }
}

TEST_CASE("a -1 entry of case (a): multiplicity 3, two transverse lines") {
  Trace tr = resolve_trace(monomial_curve(3, 7));
  DeltaPData dp = delta_p_data(tr.data, two_lines());
  CHECK(dp.delta == std::vector<long>{2, 1, 1, 2, 2});
  CHECK(dp.p == std::vector<long>{-1, 1, 1, 0, 0});

  PropertyReport rep = check_combinatorial_properties(tr, two_lines(), dp);
  CHECK(rep.prop1_ok);
  REQUIRE(rep.minus_ones.size() == 1);
  CHECK(rep.minus_ones[0].index == 1);
  CHECK(rep.minus_ones[0].case_tag == 'a');  // n = 2 and odd multiplicity
  CHECK(rep.prop2_ok);
  CHECK(rep.prop3_ok);
  CHECK(rep.all_ok());
}

TEST_CASE("a -1 entry of case (b): satellite on the first divisor, even exponent") {
  Trace tr = resolve_trace(monomial_curve(5, 8));
  DeltaPData dp = delta_p_data(tr.data, two_lines());
  CHECK(dp.delta == std::vector<long>{2, 1, 2, 2, 2});
  CHECK(dp.p == std::vector<long>{-1, 1, 1, 0, 0});

  PropertyReport rep = check_combinatorial_properties(tr, two_lines(), dp);
  CHECK(rep.prop1_ok);
  REQUIRE(rep.minus_ones.size() == 1);
  CHECK(rep.minus_ones[0].case_tag == 'b');  // n = 3 and even second exponent
  CHECK(rep.all_ok());
}

TEST_CASE("prop3 witnesses can come from the direction") {
  // (2,5) with the parabola + x-axis direction: the pruned component {1,2}
  // has p = 0 on both vertices, but both divisors are met by d
  Trace tr = resolve_trace(monomial_curve(2, 5));
  Series s = Series::monomial(1, Rat(1));
  Direction d = make_direction({DirComponent::curve(s, Series::monomial(2, Rat(1)), "parabola"),
                                DirComponent::axis_x()});
  DeltaPData dp = delta_p_data(tr.data, d);
  PropertyReport rep = check_combinatorial_properties(tr, d, dp);
  CHECK(rep.all_ok());
  bool direction_witness = false;
  for (const auto& c : rep.components) direction_witness |= (c.witness_kind == "direction");
  CHECK(direction_witness);
}

TEST_CASE("closed form for the first p entry on one-pair curves") {
  // against the replay, over several (p, q, delta1, delta2) combinations
  struct Row {
    long p, q, d1, d2, expect;
  };
  for (const Row& row : {Row{2, 3, 0, 1, 1}, Row{2, 3, 1, 1, 0}, Row{2, 3, 1, 2, 1},
                         Row{2, 3, 2, 2, 1}, Row{5, 13, 0, 1, 0}, Row{5, 13, 1, 1, 0},
                         Row{5, 13, 2, 2, 0}, Row{3, 7, 2, 1, -1}, Row{5, 8, 2, 1, -1},
                         Row{5, 8, 0, 1, 0}, Row{5, 8, 2, 2, 0}}) {
    auto got = p1_table(row.p, row.q, row.d1, row.d2);
    REQUIRE(got.has_value());
    CHECK_MESSAGE(*got == row.expect, "p1(", row.p, ",", row.q, ";", row.d1, ",", row.d2, ")");
  }
  CHECK(!p1_table(4, 6, 0, 1).has_value());  // not coprime: outside the table
  CHECK(!p1_table(2, 3, 3, 1).has_value());  // delta out of range
}

TEST_CASE("numbered dual tree") {
  Trace tr = resolve_trace(monomial_curve(5, 8));
  DeltaPData dp = delta_p_data(tr.data, two_lines());
  NumberedDualTree tree = numbered_dual_tree(tr.data, dp);
  REQUIRE(tree.N == 5);
  CHECK(tree.numbers[0].infinite);  // p_1 = -1 marks a dicritical component
  CHECK(!tree.numbers[1].infinite);
  CHECK(tree.numbers[1].value == 1);
  CHECK(tree.numbers[4].value == 0);
  CHECK(tree.curve_attach == 5);
  CHECK(tree.last_dicritical);
  REQUIRE(tree.direction_attach.size() == 2);
  CHECK(tree.direction_attach[0].attach == 1);

  // direction components raise the number of the divisor they meet
  Trace tc = resolve_trace(monomial_curve(2, 3));
  DeltaPData dpx = delta_p_data(tc.data, Direction::axis_x());
  NumberedDualTree tx = numbered_dual_tree(tc.data, dpx);
  CHECK(tx.numbers[0].value == 1);  // p_1 = 0 plus one direction component
  CHECK(tx.numbers[1].value == 1);
  CHECK(tx.numbers[2].value == 0);
}

TEST_CASE("foliation multiplicity identity on frozen examples") {
  for (auto [p, q] : std::vector<std::pair<long, long>>{{2, 3}, {3, 7}, {5, 8}, {5, 13}}) {
    Trace tr = resolve_trace(monomial_curve(p, q));
    for (const Direction& d : {Direction::none(), Direction::axis_x(),
                               Direction::axes_xy(), two_lines()}) {
      DeltaPData dp = delta_p_data(tr.data, d);
      FoliationIdentity id = foliation_mult_identity(tr.data, dp);
      CHECK(id.equal);
      CHECK(id.rhs == (p + d.count()) / 2);
    }
  }
}

TEST_CASE("one-form assembly and valuation") {
  // 6x dy - 7y dx as raw coefficients
  OneForm w{Poly2::monomial(0, 1, Rat(-7)), Poly2::monomial(1, 0, Rat(6))};
  CHECK(*w.valuation() == 1);
  CHECK(w.str().find("dx") != std::string::npos);

  // axis factors multiply in
  OneForm wf{Poly2::constant(Rat(3)), Poly2::constant(Rat(-2)), true, true};
  CHECK(wf.assembled_A() == Poly2::monomial(0, 1, Rat(3)));   // y * 3
  CHECK(wf.assembled_B() == Poly2::monomial(1, 0, Rat(-2)));  // x * -2
  CHECK(*wf.valuation() == 1);
}

TEST_CASE("tangency tests in both encodings") {
  Poly2 f = parse_poly("y^6 - x^7");
  OneForm good{Poly2::monomial(0, 1, Rat(-7)), Poly2::monomial(1, 0, Rat(6))};
  OneForm bad{Poly2::monomial(0, 1, Rat(-6)), Poly2::monomial(1, 0, Rat(7))};
  Poly2 cofactor;
  CHECK(is_tangent(f, good, &cofactor));
  CHECK(cofactor == Poly2::constant(Rat(-42)));
  CHECK_FALSE(is_tangent(f, bad));

  // parametrization encoding agrees
  Parametrization par = monomial_curve(6, 7);
  CHECK(is_tangent(par, good));
  CHECK_FALSE(is_tangent(par, bad));

  // 3y dx - 2x dy is tangent to the cusp
  Parametrization cusp = monomial_curve(2, 3);
  OneForm wc{Poly2::monomial(0, 1, Rat(3)), Poly2::monomial(1, 0, Rat(-2))};
  CHECK(is_tangent(cusp, wc));
}

TEST_CASE("minimal valuation, equation route") {
  SUBCASE("plain monomial curve") {
    SaitoResult r = min_saito_valuation(parse_poly("y^6 - x^7"), Direction::none());
    CHECK(r.nu_min == 1);
    CHECK(r.route == "equation");
    CHECK(is_tangent(parse_poly("y^6 - x^7"), r.certificate));
    CHECK(*r.certificate.valuation() == 1);
  }
  SUBCASE("first perturbation") {
    SaitoResult r = min_saito_valuation(parse_poly("y^6 - x^7 + x^4*y^4"), Direction::none());
    CHECK(r.nu_min == 2);
  }
  SUBCASE("second perturbation") {
    SaitoResult r = min_saito_valuation(parse_poly("y^6 - x^7 + y^2*x^5"), Direction::none());
    CHECK(r.nu_min == 3);
  }
  SUBCASE("cusp with the axes direction") {
    SaitoResult r = min_saito_valuation(parse_poly("y^2 - x^3"), Direction::axes_xy());
    CHECK(r.nu_min == 1);  // 3y dx - 2x dy respects both axes
    CHECK(r.certificate.x_factor);
    CHECK(r.certificate.y_factor);
  }
}

TEST_CASE("minimal valuation, parametrization route") {
  SUBCASE("cusp") {
    SaitoResult r = min_saito_valuation(monomial_curve(2, 3), Direction::none());
    CHECK(r.nu_min == 1);
    CHECK(r.route == "parametrization");
    CHECK(r.jet_order_used > 0);
  }
  SUBCASE("agrees with the equation route, axes direction") {
    SaitoResult r = min_saito_valuation(monomial_curve(2, 3), Direction::axes_xy());
    CHECK(r.nu_min == 1);
  }
  SUBCASE("perturbed (4,5) reaches the generic minimum") {
    Parametrization par;
    par.p = 4;
    par.y = Series::monomial(5, Rat(1)) + Series::monomial(6, Rat(1));
    SaitoOptions opt;
    opt.check_stability = true;
    SaitoResult r = min_saito_valuation(par, Direction::none(), opt);
    CHECK(r.nu_min == 2);
    CHECK(r.stable);
  }
  SUBCASE("custom direction component matches the axes encoding") {
    // {x=0, y=0} given as explicit smooth parametrizations
    Series s = Series::monomial(1, Rat(1));
    Direction d = make_direction({DirComponent::curve(Series(), s, "x axis"),
                                  DirComponent::curve(s, Series(), "y axis")});
    SaitoResult a = min_saito_valuation(monomial_curve(2, 3), d);
    SaitoResult b = min_saito_valuation(monomial_curve(2, 3), Direction::axes_xy());
    CHECK(a.nu_min == b.nu_min);
  }
}

TEST_CASE("equation route rejects non-axis directions") {
  Series s = Series::monomial(1, Rat(1));
  Direction d = make_direction({DirComponent::curve(s, s, "diagonal")});
  CHECK_THROWS_AS(min_saito_valuation(parse_poly("y^2 - x^3"), d), MathError);
}

TEST_CASE("stability flag reports bound sensitivity honestly") {
  SaitoOptions opt;
  opt.check_stability = true;
  SaitoResult r = min_saito_valuation(parse_poly("y^3 - x^4"), Direction::none(), opt);
  CHECK(r.stability_checked);
  CHECK(r.stable);
  CHECK(r.nu_min == 1);
}

TEST_CASE("basis criterion on the explicit pair") {
  Poly2 f = parse_poly("y^6 - x^7");
  OneForm w1{Poly2::monomial(0, 1, Rat(-7)), Poly2::monomial(1, 0, Rat(6))};
  OneForm w2{f.diff_x(), f.diff_y()};
  CriterionReport rep = check_saito_criterion(w1, w2, f, Direction::none());
  CHECK(rep.omega1_tangent);
  CHECK(rep.omega2_tangent);
  REQUIRE(rep.wedge_valuation.has_value());
  CHECK(*rep.wedge_valuation == 6);
  CHECK(rep.expected_valuation == 6);
  CHECK(rep.valuation_ok);
  CHECK(rep.divides);
  CHECK(rep.unit);
  CHECK(rep.u_str == "-42");
  CHECK(rep.is_basis);

  // the sign-swapped variant is not even tangent
  OneForm w1bad{Poly2::monomial(0, 1, Rat(-6)), Poly2::monomial(1, 0, Rat(7))};
  CriterionReport bad = check_saito_criterion(w1bad, w2, f, Direction::none());
  CHECK_FALSE(bad.omega1_tangent);
  CHECK_FALSE(bad.is_basis);
}

TEST_CASE("generic minimum verification at small scale") {
  CharExponents c = make_char_exponents({2, 3});
  GenericReport rep = verify_generic_minimum(c, Direction::none(), {1, 2});
  CHECK(rep.all_match);
  REQUIRE(rep.checks.size() == 2);
  for (const auto& chk : rep.checks) {
    CHECK(chk.expected == 1);
    CHECK(chk.got == 1);
    CHECK(chk.stable);
  }
  GenericReport repx = verify_generic_minimum(c, Direction::axis_x(), {1});
  CHECK(repx.all_match);
  CHECK(repx.checks[0].expected == 1);
}
