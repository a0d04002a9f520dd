#pragma once

// Sparse bivariate polynomials over the rationals, with the operations the
// rest of the library needs: ring arithmetic, partial derivatives, valuation,
// substitution of series, canonical single-divisor division (graded-lex), and
// Sylvester resultants for implicitization.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "planebranch/rational.hpp"
#include "planebranch/series.hpp"

namespace planebranch {

// Monomial x^i y^j.
using Mono = std::pair<long, long>;

class Poly2 {
 public:
  Poly2() = default;
  static Poly2 monomial(long i, long j, const Rat& c);
  static Poly2 constant(const Rat& c);
  static Poly2 var_x() { return monomial(1, 0, Rat(1)); }
  static Poly2 var_y() { return monomial(0, 1, Rat(1)); }

  bool is_zero() const { return coef_.empty(); }
  const std::map<Mono, Rat>& terms() const { return coef_; }
  const Rat coeff(long i, long j) const;
  void set_coeff(long i, long j, const Rat& c);

  // Minimal total degree of a term (the valuation at the origin).
  std::optional<long> valuation() const;
  long degree() const;  // max total degree; -1 for the zero polynomial

  Poly2 operator-() const;
  Poly2 operator+(const Poly2& o) const;
  Poly2 operator-(const Poly2& o) const;
  Poly2 operator*(const Poly2& o) const;
  Poly2 operator*(const Rat& c) const;
  bool operator==(const Poly2& o) const { return coef_ == o.coef_; }

  Poly2 diff_x() const;
  Poly2 diff_y() const;

  Rat eval(const Rat& x, const Rat& y) const;

  // f(sx, sy) as a truncated series (exact when both inputs are exact).
  Series substitute(const Series& sx, const Series& sy) const;

  std::string str() const;  // in the input grammar, e.g. "y^6 - x^7 + 3/2*x*y"

 private:
  std::map<Mono, Rat> coef_;  // monomial -> nonzero coefficient
};

// Graded-lex leading monomial (largest total degree, ties by x-power).
Mono leading_monomial_grlex(const Poly2& f);

// Canonical division by a single divisor under graded-lex: g = q*f + r where
// no term of r is divisible by the leading monomial of f. For one divisor the
// remainder is unique, so r == 0 iff f divides g.
struct DivMod {
  Poly2 quotient;
  Poly2 remainder;
};
DivMod divmod_single(const Poly2& g, const Poly2& f);

// Exact division; throws MathError when the remainder is nonzero.
Poly2 exact_div(const Poly2& a, const Poly2& b);

// Resultant_t(P, Q) where P = sum P[k] t^k with Poly2 coefficients; computed as
// the Sylvester determinant by fraction-free (Bareiss) elimination.
// Throws MathError when either leading coefficient is zero.
Poly2 sylvester_resultant(const std::vector<Poly2>& P, const std::vector<Poly2>& Q);

// Implicit equation of the branch (x, y) = (sx(t), sy(t)) for exact polynomial
// parametrizations: Res_t(x - sx, y - sy), normalized so the coefficient of
// the pure y-power is +1 (it is then monic in y of degree ord sx).
Poly2 implicitize(const Series& sx, const Series& sy);

}  // namespace planebranch
