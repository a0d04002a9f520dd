#include "planebranch/moduli.hpp"

#include <numeric>

#include "planebranch/errors.hpp"

namespace planebranch {

long sigma(long k) {
  if (k < 2) throw MathError("sigma: argument must be >= 2");
  if (k % 2 != 0) return (k - 3) * (k - 3) / 4;
  return (k - 2) * (k - 4) / 4;
}

long dimension_pair(long nu1, long nu2) {
  if (nu1 < 1 || nu2 < 1) throw MathError("dimension_pair: valuations must be >= 1");
  return (nu1 - 1) * (nu1 - 2) / 2 + (nu2 - 1) * (nu2 - 2) / 2;
}

DimensionReport generic_dimension(const ResolutionData& r) {
  DimensionReport rep;
  rep.N = r.N();
  for (const auto& s : r.steps) {
    rep.reduced_total.push_back(s.reduced_total_mult);
    rep.sigma_values.push_back(sigma(s.reduced_total_mult));
    rep.total += rep.sigma_values.back();
  }
  rep.rigid = rep.total == 0;
  return rep;
}

long closed_form_nh(long n, long h) {
  if (n < 2 || h < 1) throw MathError("closed form: need n >= 2, h >= 1");
  return sigma(n) + (h - 1) * sigma(n + 1);
}

namespace {

struct Enumerator {
  long bound;
  std::vector<RigidityEntry> out;

  void emit(const std::vector<long>& beta, const std::vector<long>& bar) {
    RigidityEntry e;
    e.char_exps = make_char_exponents(beta);
    e.semigroup = Semigroup{bar};
    Parametrization par = generic_parametrization(e.char_exps, 0);
    DimensionReport rep = generic_dimension(resolve(par));
    e.dimension = rep.total;
    e.rigid = rep.rigid;
    out.push_back(std::move(e));
  }

  // beta has >= 1 entries; e_cur = gcd so far; ratio = e_{i-1}/e_i of the last
  // added exponent (unused while beta is a singleton).
  void extend(std::vector<long>& beta, std::vector<long>& bar, long e_cur, long ratio) {
    const bool first = beta.size() == 1;
    for (long next = beta.back() + 1;; ++next) {
      long bar_floor = first ? next : 2 * bar.back() + next - beta.back();
      if (bar_floor > bound) break;
      long e_new = std::gcd(e_cur, next);
      if (e_new >= e_cur) continue;
      long bar_next = first ? next : ratio * bar.back() + next - beta.back();
      if (bar_next > bound) continue;
      beta.push_back(next);
      bar.push_back(bar_next);
      if (e_new == 1)
        emit(beta, bar);
      else
        extend(beta, bar, e_new, e_cur / e_new);
      beta.pop_back();
      bar.pop_back();
    }
  }
};

}  // namespace

std::vector<RigidityEntry> classify_rigidity(long max_mult, long generator_bound) {
  if (max_mult < 2) throw MathError("rigidity: multiplicity range is empty");
  if (generator_bound < 3) throw MathError("rigidity: generator bound too small");
  Enumerator en;
  en.bound = generator_bound;
  for (long b0 = 2; b0 <= std::min(max_mult, generator_bound); ++b0) {
    std::vector<long> beta{b0}, bar{b0};
    en.extend(beta, bar, b0, 0);
  }
  return en.out;
}

}  // namespace planebranch
