#pragma once

// Exact arbitrary-precision arithmetic (GMP) plus a small deterministic RNG
// used to draw reproducible "generic" coefficients.

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "planebranch/errors.hpp"

namespace planebranch {

using Int = mpz_class;
using Rat = mpq_class;

// Reduced fraction num/den with den > 0. GMP's mpq_class(num, den) does not
// canonicalize on its own.
inline Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw MathError("rational with zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_zero(const Rat& r) { return sgn(r) == 0; }

inline std::string to_string(const Int& z) { return z.get_str(); }

inline std::string to_string(const Rat& r) { return r.get_str(); }

// Checked narrowing for interop (JSON, exponents).
inline long to_long(const Int& z) {
  if (!z.fits_slong_p()) throw MathError("integer too large for machine word");
  return z.get_si();
}

inline Int int_pow(Int base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

// splitmix64: tiny, well-mixed, identical on every platform. Used wherever the
// library needs reproducible pseudo-random draws (generic coefficients,
// randomized regression suites).
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, n).
  std::uint64_t below(std::uint64_t n) { return next() % n; }

  // Small nonzero integer in [-9,-1] u [1,9]: keeps generic coefficients cheap
  // to carry through exact arithmetic while avoiding accidental vanishing.
  long small_nonzero() {
    long v = static_cast<long>(below(9)) + 1;
    return (next() & 1) ? v : -v;
  }

 private:
  std::uint64_t state_;
};

}  // namespace planebranch
