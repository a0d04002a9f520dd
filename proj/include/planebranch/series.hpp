#pragma once

// Truncated univariate power series with exact rational coefficients.
//
// A Series stores a sparse coefficient map plus a truncation order: exponents
// >= truncation() are UNKNOWN, not zero. The sentinel kExact marks a series
// whose tail is exactly zero (a polynomial). Every operation propagates the
// truncation honestly; consulting a coefficient beyond it throws
// TruncationError rather than silently zero-filling.

#include <map>
#include <optional>
#include <string>

#include "planebranch/rational.hpp"

namespace planebranch {

class Series {
 public:
  static constexpr long kExact = 0x3fffffffffffffffL;

  // Zero series: with kExact an exact zero, otherwise zero up to `trunc`.
  explicit Series(long trunc = kExact) : trunc_(trunc) {}

  static Series monomial(long exponent, const Rat& c, long trunc = kExact);

  long truncation() const { return trunc_; }
  bool is_exact() const { return trunc_ == kExact; }

  // True when the series is identically zero as a polynomial (exact, no terms).
  bool is_exact_zero() const { return trunc_ == kExact && coef_.empty(); }

  // Smallest exponent with nonzero coefficient, or nullopt when every stored
  // coefficient vanishes (the series is zero at least up to the truncation).
  std::optional<long> order() const;

  // Order when it is decidable: a nonzero stored term gives it; an exact zero
  // has no order (MathError); otherwise the zero prefix is all we know and the
  // caller cannot proceed (TruncationError).
  long order_or_throw(const std::string& context) const;

  const Rat& coeff(long exponent) const;  // throws TruncationError past trunc_
  void set_coeff(long exponent, const Rat& value);

  const std::map<long, Rat>& terms() const { return coef_; }
  std::size_t term_count() const { return coef_.size(); }

  // Drop knowledge beyond `trunc` (no-op if already coarser).
  Series truncated(long trunc) const;

  Series operator-() const;
  Series operator+(const Series& o) const;
  Series operator-(const Series& o) const;
  Series operator*(const Series& o) const;
  Series operator*(const Rat& c) const;
  bool operator==(const Series& o) const;  // same knowledge and same terms

  // Multiply by t^k (k may be negative; resulting exponents must stay >= 0).
  Series shifted(long k) const;

  // Add a constant (exponent-0) term.
  Series plus_const(const Rat& c) const;

  // Substitute t -> c*t (scales coefficient at exponent e by c^e).
  Series scaled_var(const Rat& c) const;

  // Derivative d/dt.
  Series derivative() const;

  // Substitute t -> phi(t) where phi has order >= 1. Exponents kept < bound
  // and < the propagated truncation.
  Series compose(const Series& phi) const;

  std::string str(const std::string& var = "t") const;

 private:
  std::map<long, Rat> coef_;  // exponent -> nonzero coefficient, exponents < trunc_
  long trunc_;
};

// a / b for ord(a) >= ord(b) (checked); truncation shrinks by ord(b) as the
// division consumes that many known terms.
Series divide(const Series& a, const Series& b);

// Multiplicative inverse of a unit series (order 0), known through `upto`.
Series invert_unit(const Series& u, long upto);

// Compares ord(a) with ord(b) (-1/0/+1), treating the truncation of a series
// with no known terms as a lower bound for its order. Throws TruncationError
// when the comparison is not decidable from what is known.
int compare_orders(const Series& a, const Series& b);

}  // namespace planebranch
