#pragma once

// Parsers for the input grammar (documented in docs/grammar.md):
//   parametrization:  x=t^8; y=t^20+t^30+t^35     (any single parameter letter)
//   polynomial:       y^6-x^7+3/2*x^4*y^4
// Rational coefficients are written n or n/d; '*' between factors is optional.
// Errors carry the byte offset of the offending token.

#include <string>
#include <utility>

#include "planebranch/curve.hpp"
#include "planebranch/poly2.hpp"
#include "planebranch/series.hpp"

namespace planebranch {

// "x=<expr>; y=<expr>" (either order). The parameter letter is inferred (any
// letter other than x/y; both sides must agree). Returns the raw series pair;
// use convert_to_normal for the standard form.
std::pair<Series, Series> parse_param_pair(const std::string& text);

// Convenience: parse and normalize into a Parametrization.
Parametrization parse_parametrization(const std::string& text);

// Bivariate polynomial in x and y.
Poly2 parse_poly(const std::string& text);

// Comma/space-separated list of integers, e.g. "8,20,30,35".
std::vector<long> parse_long_list(const std::string& text);

// Pair list "(2,5),(2,15),(2,35)".
std::vector<std::pair<long, long>> parse_pair_list(const std::string& text);

}  // namespace planebranch
