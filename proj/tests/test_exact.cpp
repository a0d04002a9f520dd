#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "planebranch/matrix.hpp"
#include "planebranch/poly2.hpp"
#include "planebranch/rational.hpp"
#include "planebranch/series.hpp"

using namespace planebranch;

TEST_CASE("rationals are canonicalized") {
  Rat r = make_rat(Int(6), Int(-4));
  CHECK(r == make_rat(Int(-3), Int(2)));
  CHECK(to_string(r) == "-3/2");
  CHECK_THROWS_AS(make_rat(Int(1), Int(0)), MathError);
}

TEST_CASE("seeded rng is deterministic and small_nonzero stays in range") {
  SeededRng a(42), b(42);
  for (int i = 0; i < 100; ++i) CHECK(a.next() == b.next());
  SeededRng c(7);
  for (int i = 0; i < 200; ++i) {
    long v = c.small_nonzero();
    CHECK(v != 0);
    CHECK(v >= -9);
    CHECK(v <= 9);
  }
}

TEST_CASE("series basics: monomial, order, exactness") {
  Series s = Series::monomial(3, Rat(2));
  CHECK(s.is_exact());
  CHECK(*s.order() == 3);
  CHECK(s.coeff(3) == Rat(2));
  CHECK(s.coeff(100) == Rat(0));  // exact tail is known to vanish

  Series z;  // exact zero
  CHECK(z.is_exact_zero());
  CHECK(!z.order());
  CHECK_THROWS_AS(z.order_or_throw("test"), MathError);

  Series u(5);  // unknown beyond t^5
  CHECK(!u.is_exact());
  CHECK_THROWS_AS(u.coeff(5), TruncationError);
  CHECK_THROWS_AS(u.order_or_throw("test"), TruncationError);
}

TEST_CASE("series arithmetic propagates truncation honestly") {
  Series a = Series::monomial(2, Rat(1)).truncated(10);  // t^2 + O(t^10)
  Series b = Series::monomial(3, Rat(1));                // exact t^3
  Series sum = a + b;
  CHECK(sum.truncation() == 10);
  CHECK(sum.coeff(2) == Rat(1));
  CHECK(sum.coeff(3) == Rat(1));

  // product truncation: min over (trunc_a + ord_b, trunc_b + ord_a)
  Series prod = a * b;
  CHECK(prod.truncation() == 13);
  CHECK(prod.coeff(5) == Rat(1));

  // exact zero annihilates even unknown series
  Series z;
  CHECK((z * a).is_exact_zero());
}

TEST_CASE("series composition") {
  // f(t) = t^2, phi(t) = t + t^2 -> t^2 + 2t^3 + t^4
  Series f = Series::monomial(2, Rat(1));
  Series phi = Series::monomial(1, Rat(1)) + Series::monomial(2, Rat(1));
  Series g = f.compose(phi);
  CHECK(g.is_exact());
  CHECK(g.coeff(2) == Rat(1));
  CHECK(g.coeff(3) == Rat(2));
  CHECK(g.coeff(4) == Rat(1));
  CHECK(g.coeff(5) == Rat(0));
}

TEST_CASE("series division: monomial fast path stays exact") {
  Series a = Series::monomial(5, Rat(3)) + Series::monomial(7, Rat(1));
  Series b = Series::monomial(2, Rat(3));
  Series q = divide(a, b);
  CHECK(q.is_exact());
  CHECK(q.coeff(3) == Rat(1));
  CHECK(q.coeff(5) == make_rat(Int(1), Int(3)));
}

TEST_CASE("series division by non-monomial tracks consumed precision") {
  // (t^2 + t^3) / (t + t^2) = t exactly; with finite knowledge the quotient
  // keeps trunc - ord(divisor) terms.
  Series num = (Series::monomial(2, Rat(1)) + Series::monomial(3, Rat(1))).truncated(10);
  Series den = Series::monomial(1, Rat(1)) + Series::monomial(2, Rat(1));
  Series q = divide(num, den);
  CHECK(q.truncation() == 9);
  CHECK(q.coeff(1) == Rat(1));
  for (long e = 2; e < 9; ++e) CHECK(q.coeff(e) == Rat(0));

  // exact / exact with a non-monomial divisor is refused: the quotient need
  // not terminate, so the caller must pick a working truncation first.
  CHECK_THROWS_AS(divide(Series::monomial(2, Rat(1)), den), MathError);
  CHECK_NOTHROW(divide(num.truncated(8), den));
}

TEST_CASE("unit inversion") {
  Series u = Series::monomial(0, Rat(1)) + Series::monomial(1, Rat(-1));  // 1 - t
  Series inv = invert_unit(u, 6);
  for (long e = 0; e < 6; ++e) CHECK(inv.coeff(e) == Rat(1));  // geometric series
  CHECK(inv.truncation() == 6);
}

TEST_CASE("order comparison with partial knowledge") {
  Series a = Series::monomial(2, Rat(1));
  Series b = Series::monomial(5, Rat(1));
  CHECK(compare_orders(a, b) == -1);
  CHECK(compare_orders(b, a) == 1);
  CHECK(compare_orders(a, a) == 0);

  Series unknown(10);  // zero through t^9, unknown after
  // ord(unknown) >= 10 > 2, decidable:
  CHECK(compare_orders(a, unknown) == -1);
  Series closecall(2);  // zero through t^1, unknown after
  CHECK_THROWS_AS(compare_orders(a, closecall), TruncationError);
}

TEST_CASE("polynomial ring operations") {
  Poly2 f = Poly2::monomial(0, 6, Rat(1)) - Poly2::monomial(7, 0, Rat(1));
  CHECK(f.degree() == 7);
  CHECK(*f.valuation() == 6);
  CHECK(f.coeff(7, 0) == Rat(-1));
  Poly2 fx = f.diff_x();
  CHECK(fx.coeff(6, 0) == Rat(-7));
  Poly2 fy = f.diff_y();
  CHECK(fy.coeff(0, 5) == Rat(6));
  CHECK((f - f).is_zero());
  CHECK(f.eval(Rat(1), Rat(1)) == Rat(0));
  CHECK(f.eval(Rat(0), Rat(2)) == Rat(64));
}

TEST_CASE("polynomial substitution of series") {
  Poly2 f = Poly2::monomial(0, 2, Rat(1)) - Poly2::monomial(3, 0, Rat(1));  // y^2 - x^3
  Series sx = Series::monomial(2, Rat(1));
  Series sy = Series::monomial(3, Rat(1));
  Series pulled = f.substitute(sx, sy);
  CHECK(pulled.is_exact_zero());

  Series sy2 = Series::monomial(3, Rat(1)) + Series::monomial(4, Rat(1));
  Series p2 = f.substitute(sx, sy2);
  CHECK(*p2.order() == 7);  // 2*t^7 + t^8
  CHECK(p2.coeff(7) == Rat(2));
}

TEST_CASE("canonical single-divisor division") {
  // g = (x + y) * f + x, f = y^2 - x^3: remainder of g by f must be x + terms
  // not divisible by the leading monomial of f.
  Poly2 f = Poly2::monomial(0, 2, Rat(1)) - Poly2::monomial(3, 0, Rat(1));
  Poly2 q = Poly2::var_x() + Poly2::var_y();
  Poly2 g = q * f + Poly2::var_x();
  DivMod dm = divmod_single(g, f);
  CHECK(dm.quotient == q);
  CHECK(dm.remainder == Poly2::var_x());
  CHECK(exact_div(q * f, f) == q);
  CHECK_THROWS_AS(exact_div(g, f), MathError);
}

TEST_CASE("implicitization of exact parametrizations") {
  Poly2 cusp = implicitize(Series::monomial(2, Rat(1)), Series::monomial(3, Rat(1)));
  Poly2 expected = Poly2::monomial(0, 2, Rat(1)) - Poly2::monomial(3, 0, Rat(1));
  CHECK(cusp == expected);

  // (t^4, t^5 + t^6): implicit equation must pull back to exactly zero
  Series sx = Series::monomial(4, Rat(1));
  Series sy = Series::monomial(5, Rat(1)) + Series::monomial(6, Rat(1));
  Poly2 f = implicitize(sx, sy);
  CHECK(f.substitute(sx, sy).is_exact_zero());
  CHECK(f.coeff(0, 4) == Rat(1));  // normalized monic in the pure y-power
}

TEST_CASE("unitriangular inversion") {
  IntMat u(3, 3);
  for (int i = 0; i < 3; ++i) u.at(i, i) = 1;
  u.at(0, 1) = -1;
  u.at(0, 2) = -1;
  u.at(1, 2) = -1;
  IntMat inv = inverse_unitriangular(u);
  CHECK(u * inv == IntMat::identity(3));
  CHECK(inv.at(0, 2) == 2);  // fibonacci-like accumulation
}

TEST_CASE("rref and kernel are exact") {
  // x + 2y + 3z = 0, 2x + 4y + 7z = 0 -> kernel spanned by (-2, 1, 0)
  RatMat m(2, 3);
  m.at(0, 0) = 1; m.at(0, 1) = 2; m.at(0, 2) = 3;
  m.at(1, 0) = 2; m.at(1, 1) = 4; m.at(1, 2) = 7;
  auto basis = kernel_basis(m);
  REQUIRE(basis.size() == 1);
  const auto& v = basis[0];
  for (long r = 0; r < 2; ++r) {
    Rat acc(0);
    for (long c = 0; c < 3; ++c) acc += m.at(r, c) * v[c];
    CHECK(is_zero(acc));
  }
  CHECK(v[1] == Rat(1));  // free column normalized to 1

  // full-rank system has empty kernel
  RatMat id(2, 2);
  id.at(0, 0) = 1; id.at(1, 1) = 1;
  CHECK(kernel_basis(id).empty());
}

TEST_CASE("rref handles rational pivots without rounding") {
  RatMat m(2, 2);
  m.at(0, 0) = make_rat(Int(1), Int(3));
  m.at(0, 1) = make_rat(Int(1), Int(7));
  m.at(1, 0) = make_rat(Int(2), Int(3));
  m.at(1, 1) = make_rat(Int(2), Int(7));  // second row = 2 * first
  Rref r = rref(m);
  CHECK(r.rank == 1);
  REQUIRE(r.free_cols.size() == 1);
  auto v = kernel_vector(r, r.free_cols[0]);
  Rat acc = m.at(0, 0) * v[0] + m.at(0, 1) * v[1];
  CHECK(is_zero(acc));
}
