#pragma once

// Curve representations and exact conversions between them:
// parametrization <-> characteristic exponents -> Puiseux pairs, semigroup,
// conductor; seeded instantiation of a generic member of a topological class.

#include <optional>
#include <string>
#include <vector>

#include "planebranch/poly2.hpp"
#include "planebranch/series.hpp"

namespace planebranch {

// x = t^p, y = y_series(t). Normal form asks p < q = ord(y), p not dividing q
// (singular case); smooth curves carry the `smooth` flag instead.
struct Parametrization {
  long p = 1;
  Series y;
  bool smooth = false;

  long truncation() const { return y.truncation(); }
  Series x_series() const { return Series::monomial(p, Rat(1)); }
};

// Characteristic exponents (beta_0, ..., beta_g): strictly increasing, with
// the gcd chain e_i = gcd(beta_0..beta_i) strictly decreasing to 1.
struct CharExponents {
  std::vector<long> beta;

  long multiplicity() const { return beta.at(0); }
  bool is_smooth() const { return beta.size() == 1 && beta[0] == 1; }
  std::vector<long> e_chain() const;  // e_0 = beta_0, ..., e_g = 1
};

struct PuiseuxPairs {
  std::vector<std::pair<long, long>> pairs;  // (m_i, n_i), coprime, m_i >= 2
};

struct Semigroup {
  std::vector<long> generators;  // (bar beta_0, ..., bar beta_g)
};

// Validation: throws MathError when the tuple violates the invariants.
CharExponents make_char_exponents(const std::vector<long>& beta);

// Characteristic exponents of (t^p, y): exponents of y where the running gcd
// with p strictly drops. Throws TruncationError when the chain has not reached
// 1 within the known terms of a non-exact series, MathError when an exact
// parametrization is a d-fold cover (gcd never reaches 1).
CharExponents char_exponents(const Parametrization& par);

// General form used on strict transforms: branch given by two series (sx, sy),
// neither assumed pure. Reparametrizes so that the small-order series becomes
// c*t^p and scans the other one's support.
CharExponents char_exponents_general(const Series& sx, const Series& sy);

Semigroup semigroup_from_char(const CharExponents& c);
PuiseuxPairs puiseux_pairs(const CharExponents& c);
CharExponents char_from_pairs(const PuiseuxPairs& pp);
CharExponents char_from_semigroup(const Semigroup& s);

// Smallest c with [c, infinity) inside the semigroup, via the Apery set.
long conductor(const Semigroup& s);
long conductor(const CharExponents& c);

// Seeded generic member of the class: coefficient 1 on each characteristic
// exponent; nonzero pseudo-random integers on every other exponent compatible
// with the class (multiples of e_i strictly between beta_i and beta_{i+1};
// everything above beta_g) up to the generation window `trunc` (default:
// conductor + 2*beta_0). The result is an exact polynomial parametrization.
Parametrization generic_parametrization(const CharExponents& c, std::uint64_t seed,
                                        long trunc = 0);

// Normalization to the standard form: swaps the roles of x and y when
// ord(y) < p, absorbs leading exponents divisible by p into coordinate
// changes, flags smooth curves. Throws MathError on non-irreducible input.
Parametrization convert_to_normal(long p, const Series& y);

}  // namespace planebranch
