#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <set>

#include "planebranch/curve.hpp"
#include "planebranch/moduli.hpp"
#include "planebranch/parse.hpp"
#include "planebranch/resolution.hpp"

using namespace planebranch;

TEST_CASE("sigma values") {
  CHECK(sigma(2) == 0);
  CHECK(sigma(3) == 0);
  CHECK(sigma(4) == 0);
  CHECK(sigma(5) == 1);
  CHECK(sigma(6) == 2);
  CHECK(sigma(7) == 4);
  CHECK(sigma(8) == 6);
  CHECK(sigma(9) == 9);
  CHECK(sigma(10) == 12);
  CHECK_THROWS_AS(sigma(1), MathError);
}

TEST_CASE("sigma splits as a balanced two-valuation dimension") {
  for (long k = 2; k <= 60; ++k) CHECK(sigma(k) == dimension_pair(k / 2, k - k / 2));
}

TEST_CASE("the running example has dimension 20") {
  Parametrization par = parse_parametrization("x=t^8; y=t^20+t^30+t^35");
  DimensionReport d = generic_dimension(resolve(par));
  CHECK(d.N == 12);
  CHECK(d.sigma_values == std::vector<long>{6, 9, 1, 2, 1, 1, 0, 0, 0, 0, 0, 0});
  CHECK(d.total == 20);
  CHECK_FALSE(d.rigid);
}

TEST_CASE("one-pair closed form matches the resolution computation") {
  for (long n = 2; n <= 6; ++n)
    for (long h = 1; h <= 3; ++h) {
      if (std::gcd(n, n * h + 1) != 1) continue;
      CharExponents c = make_char_exponents({n, n * h + 1});
      DimensionReport d = generic_dimension(resolve(generic_parametrization(c, 3)));
      CHECK(d.total == closed_form_nh(n, h));
    }
}

TEST_CASE("closed-form examples") {
  CHECK(closed_form_nh(2, 1) == 0);   // cusp family
  CHECK(closed_form_nh(4, 1) == 0);   // (4,5)
  CHECK(closed_form_nh(4, 2) == 1);   // (4,9)
  CHECK(closed_form_nh(4, 3) == 2);   // (4,13)
  CHECK(closed_form_nh(5, 1) == 1);   // (5,6)
  CHECK(closed_form_nh(8, 1) == 6);   // (8,9)
}

TEST_CASE("smooth curves are rigid") {
  Parametrization par;
  par.p = 1;
  par.y = Series();
  par.smooth = true;
  DimensionReport d = generic_dimension(resolve(par));
  CHECK(d.N == 0);
  CHECK(d.total == 0);
  CHECK(d.rigid);
}

TEST_CASE("rigidity classification at multiplicity up to three") {
  auto entries = classify_rigidity(3, 20);
  CHECK(!entries.empty());
  for (const auto& e : entries) {
    CHECK(e.rigid);  // every branch of multiplicity 2 or 3 is rigid
    CHECK(e.dimension == 0);
  }
}

TEST_CASE("no rigid class of multiplicity five") {
  // The first center of a multiplicity-5 branch already contributes
  // sigma(5) = 1, so nothing with beta_0 = 5 can be rigid.
  int seen = 0;
  for (const auto& e : classify_rigidity(5, 20))
    if (e.char_exps.multiplicity() == 5) {
      CHECK(!e.rigid);
      CHECK(e.dimension >= 1);
      ++seen;
    }
  CHECK(seen == 12);  // q in 6..19 coprime-step: 5 does not divide q
}

TEST_CASE("rigidity classification at multiplicity four") {
  auto entries = classify_rigidity(4, 24);
  std::set<std::vector<long>> rigid, nonrigid;
  for (const auto& e : entries)
    (e.rigid ? rigid : nonrigid).insert(e.char_exps.beta);

  CHECK(rigid.count({4, 5}) == 1);
  CHECK(rigid.count({4, 7}) == 1);
  CHECK(rigid.count({4, 6, 7}) == 1);    // semigroup (4, 6, 13)
  CHECK(rigid.count({4, 6, 17}) == 1);   // semigroup (4, 6, 23)
  CHECK(nonrigid.count({4, 9}) == 1);
  CHECK(nonrigid.count({4, 11}) == 1);
  CHECK(nonrigid.count({4, 10, 11}) == 1);

  // dimension values for the first non-rigid classes
  for (const auto& e : entries) {
    if (e.char_exps.beta == std::vector<long>{4, 9}) CHECK(e.dimension == 1);
    if (e.char_exps.beta == std::vector<long>{4, 13}) CHECK(e.dimension == 2);
  }
}

TEST_CASE("enumeration respects the semigroup generator bound") {
  auto entries = classify_rigidity(4, 24);
  for (const auto& e : entries)
    for (long g : e.semigroup.generators) CHECK(g <= 24);
  // (4, 6, 19) has semigroup (4, 6, 25): just beyond the bound
  for (const auto& e : entries) CHECK(e.char_exps.beta != std::vector<long>{4, 6, 19});
  // (4, 6, 17) has semigroup (4, 6, 23): inside
  bool found = false;
  for (const auto& e : entries) found |= (e.char_exps.beta == std::vector<long>{4, 6, 17});
  CHECK(found);
}

TEST_CASE("enumeration is deterministic and duplicate-free") {
  auto a = classify_rigidity(4, 24);
  auto b = classify_rigidity(4, 24);
  REQUIRE(a.size() == b.size());
  std::set<std::vector<long>> seen;
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].char_exps.beta == b[i].char_exps.beta);
    CHECK(seen.insert(a[i].char_exps.beta).second);
  }
}

TEST_CASE("guards on the enumeration arguments") {
  CHECK_THROWS_AS(classify_rigidity(1, 20), MathError);
  CHECK_THROWS_AS(classify_rigidity(4, 2), MathError);
}
