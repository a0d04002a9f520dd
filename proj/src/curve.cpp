#include "planebranch/curve.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "planebranch/errors.hpp"

namespace planebranch {

namespace {

// Series from an explicit coefficient list with a chosen truncation claim.
// Used by the Newton solver below, where an iterate is only trusted up to its
// current precision anyway.
Series with_trunc(const std::map<long, Rat>& terms, long trunc) {
  Series s(trunc);
  for (const auto& [e, c] : terms) {
    if (e >= trunc) break;
    s.set_coeff(e, c);
  }
  return s;
}

Series series_pow(const Series& base, long n, long trunc) {
  Series acc = Series::monomial(0, Rat(1), trunc);
  for (long k = 0; k < n; ++k) acc = (acc * base).truncated(trunc);
  return acc;
}

// Solves w(s) with w^p * (1 + g(s*w)) = 1 (mod s^T), w(0) = 1, by Newton
// iteration with doubling precision. Then t = s*w(s) turns the series
// c*t^p*(1 + g(t)) into the pure power c*s^p.
Series solve_unit_scaling(const Series& g, long p, long T) {
  if (g.terms().empty()) return Series::monomial(0, Rat(1), T);
  std::map<long, Rat> w{{0, Rat(1)}};
  long prec = 1;
  while (prec < T) {
    prec = std::min(2 * prec, T);
    Series wp = with_trunc(w, prec);
    Series phi = wp.shifted(1);
    Series one_plus = g.truncated(prec).compose(phi).plus_const(Rat(1));
    Series F = series_pow(wp, p, prec) * one_plus - Series::monomial(0, Rat(1), prec);
    Series dF = series_pow(wp, p - 1, prec) * one_plus * Rat(p) +
                series_pow(wp, p, prec) * g.derivative().truncated(prec).compose(phi) *
                    Series::monomial(1, Rat(1), prec);
    if (F.terms().empty()) {
      w = wp.terms();
      continue;
    }
    Series upd = divide(F, dF);
    w = (wp - upd).terms();
  }
  return with_trunc(w, T);
}

// Support scan: exponents of y where the running gcd with p strictly drops.
// Returns the chain when it closes at 1; nullopt otherwise.
std::optional<std::vector<long>> scan_gcd_chain(long p, const Series& y) {
  std::vector<long> beta{p};
  long g = p;
  for (const auto& [e, c] : y.terms()) {
    long ng = std::gcd(g, e);
    if (ng < g) {
      beta.push_back(e);
      g = ng;
      if (g == 1) return beta;
    }
  }
  return std::nullopt;
}

}  // namespace

std::vector<long> CharExponents::e_chain() const {
  std::vector<long> e;
  long g = 0;
  for (long b : beta) {
    g = std::gcd(g, b);
    e.push_back(g);
  }
  return e;
}

CharExponents make_char_exponents(const std::vector<long>& beta) {
  if (beta.empty()) throw MathError("characteristic exponents: empty tuple");
  if (beta.size() == 1) {
    if (beta[0] != 1)
      throw MathError("characteristic exponents: a single exponent must be 1 (smooth)");
    return CharExponents{beta};
  }
  if (beta[0] < 2)
    throw MathError("characteristic exponents: multiplicity must be >= 2 for a singular tuple");
  long g = beta[0];
  for (std::size_t i = 1; i < beta.size(); ++i) {
    if (beta[i] <= beta[i - 1])
      throw MathError("characteristic exponents: not strictly increasing");
    long ng = std::gcd(g, beta[i]);
    if (ng >= g)
      throw MathError("characteristic exponents: gcd chain must strictly drop at beta_" +
                      std::to_string(i));
    g = ng;
  }
  if (g != 1) throw MathError("characteristic exponents: gcd chain must end at 1");
  return CharExponents{beta};
}

CharExponents char_exponents(const Parametrization& par) {
  if (par.smooth || par.p == 1) return CharExponents{{1}};
  if (par.y.is_exact_zero())
    throw MathError("parametrization is a multiple cover of an axis");
  auto oy = par.y.order();
  if (!oy)
    throw TruncationError("characteristic exponents: y has no known terms; increase truncation");
  if (*oy < par.p)
    throw MathError("parametrization is not in normal form (ord y < p); convert first");
  auto chain = scan_gcd_chain(par.p, par.y);
  if (chain) return make_char_exponents(*chain);
  if (par.y.is_exact())
    throw MathError("parametrization is a multiple cover (gcd chain never reaches 1)");
  throw TruncationError("characteristic exponents: gcd chain open at truncation " +
                        std::to_string(par.y.truncation()) + "; increase truncation");
}

CharExponents char_exponents_general(const Series& sx, const Series& sy) {
  if (sx.is_exact_zero() && sy.is_exact_zero())
    throw MathError("characteristic exponents: degenerate (both series zero)");
  if (sx.is_exact_zero() || sy.is_exact_zero()) return CharExponents{{1}};  // an axis
  long ox = sx.order_or_throw("characteristic exponents");
  long oy = sy.order_or_throw("characteristic exponents");
  const Series& a = (ox <= oy) ? sx : sy;
  const Series& b = (ox <= oy) ? sy : sx;
  const long p = std::min(ox, oy);
  if (p == 0) throw MathError("characteristic exponents: series must vanish at 0");
  if (p == 1) return CharExponents{{1}};

  // a = c*t^p*(1 + g); reparametrize so a becomes pure, then scan b.
  const Rat c = a.terms().begin()->second;
  Series g = divide(a, Series::monomial(p, c)).plus_const(Rat(-1));
  if (g.terms().empty() && g.is_exact()) {
    // a is already a pure power; b is scanned as-is.
    auto chain = scan_gcd_chain(p, b);
    if (chain) return make_char_exponents(*chain);
    if (b.is_exact())
      throw MathError("branch is a multiple cover (gcd chain never reaches 1)");
    throw TruncationError("characteristic exponents: gcd chain open; increase truncation");
  }

  const bool exact_in = a.is_exact() && b.is_exact();
  const long avail = std::min(a.truncation(), b.truncation());
  long T = 2 * p + 64;
  for (int attempt = 0; attempt < 5; ++attempt, T *= 2) {
    if (!exact_in && T > avail) T = avail;
    Series w = solve_unit_scaling(g.truncated(T), p, T);
    Series ytil = b.truncated(T).compose(w.shifted(1));
    auto chain = scan_gcd_chain(p, ytil);
    if (chain) return make_char_exponents(*chain);
    if (!exact_in && T >= avail) break;
  }
  throw TruncationError(
      "characteristic exponents: gcd chain did not close within the working "
      "precision; increase truncation (or the input is a multiple cover)");
}

Semigroup semigroup_from_char(const CharExponents& c) {
  if (c.is_smooth()) return Semigroup{{1}};
  const auto& beta = c.beta;
  const auto e = c.e_chain();
  std::vector<long> bar{beta[0], beta[1]};
  for (std::size_t i = 1; i + 1 < beta.size(); ++i)
    bar.push_back((e[i - 1] / e[i]) * bar[i] + beta[i + 1] - beta[i]);
  return Semigroup{bar};
}

PuiseuxPairs puiseux_pairs(const CharExponents& c) {
  PuiseuxPairs pp;
  if (c.is_smooth()) return pp;
  const auto e = c.e_chain();
  for (std::size_t i = 1; i < c.beta.size(); ++i)
    pp.pairs.emplace_back(e[i - 1] / e[i], c.beta[i] / e[i]);
  return pp;
}

CharExponents char_from_pairs(const PuiseuxPairs& pp) {
  if (pp.pairs.empty()) return CharExponents{{1}};
  const std::size_t g = pp.pairs.size();
  for (const auto& [m, n] : pp.pairs) {
    if (m < 2) throw MathError("Puiseux pairs: first entry must be >= 2");
    if (n <= 1) throw MathError("Puiseux pairs: second entry must be > 1");
    if (std::gcd(m, n) != 1) throw MathError("Puiseux pairs: entries must be coprime");
  }
  // e_g = 1, e_{i-1} = m_i * e_i; beta_i = n_i * e_i; beta_0 = prod m_i.
  std::vector<long> e(g + 1);
  e[g] = 1;
  for (std::size_t i = g; i >= 1; --i) e[i - 1] = pp.pairs[i - 1].first * e[i];
  std::vector<long> beta{e[0]};
  for (std::size_t i = 1; i <= g; ++i) beta.push_back(pp.pairs[i - 1].second * e[i]);
  return make_char_exponents(beta);
}

CharExponents char_from_semigroup(const Semigroup& s) {
  if (s.generators.empty()) throw MathError("semigroup: no generators");
  if (s.generators == std::vector<long>{1}) return CharExponents{{1}};
  const auto& bar = s.generators;
  std::vector<long> e;
  long g = 0;
  for (long b : bar) {
    if (b < 1) throw MathError("semigroup: generators must be positive");
    g = std::gcd(g, b);
    e.push_back(g);
  }
  if (g != 1) throw MathError("semigroup: generators are not coprime");
  std::vector<long> beta{bar[0]};
  if (bar.size() >= 2) beta.push_back(bar[1]);
  for (std::size_t i = 1; i + 1 < bar.size(); ++i) {
    if (e[i] == 0 || e[i - 1] % e[i] != 0 || e[i] >= e[i - 1])
      throw MathError("semigroup: gcd chain does not strictly drop");
    beta.push_back(bar[i + 1] - (e[i - 1] / e[i]) * bar[i] + beta[i]);
  }
  CharExponents c = make_char_exponents(beta);
  if (semigroup_from_char(c).generators != bar)
    throw MathError("semigroup: generators are not the minimal generators of a branch semigroup");
  return c;
}

long conductor(const Semigroup& s) {
  if (s.generators.empty()) throw MathError("semigroup: no generators");
  const long m = s.generators[0];
  if (m < 1) throw MathError("semigroup: generators must be positive");
  if (m == 1) return 0;
  const long INF = std::numeric_limits<long>::max() / 4;
  std::vector<long> dist(m, INF);
  dist[0] = 0;
  // Bellman-Ford over residues mod m; at most m rounds to stabilize.
  for (long round = 0; round < m; ++round) {
    bool changed = false;
    for (long r = 0; r < m; ++r) {
      if (dist[r] >= INF) continue;
      for (long gen : s.generators) {
        long nr = (r + gen) % m;
        if (dist[r] + gen < dist[nr]) {
          dist[nr] = dist[r] + gen;
          changed = true;
        }
      }
    }
    if (!changed) break;
  }
  long mx = 0;
  for (long r = 0; r < m; ++r) {
    if (dist[r] >= INF) throw MathError("semigroup: generators are not coprime");
    mx = std::max(mx, dist[r]);
  }
  return mx - m + 1;
}

long conductor(const CharExponents& c) { return conductor(semigroup_from_char(c)); }

Parametrization generic_parametrization(const CharExponents& c, std::uint64_t seed,
                                        long trunc) {
  if (c.is_smooth()) return Parametrization{1, Series(Series::kExact), true};
  const auto& beta = c.beta;
  const auto e = c.e_chain();
  const long beta_g = beta.back();
  long window = trunc > 0 ? trunc : conductor(c) + 2 * beta[0];
  window = std::max(window, beta_g + 1);

  Series y(Series::kExact);
  for (std::size_t i = 1; i < beta.size(); ++i) y.set_coeff(beta[i], Rat(1));
  SeededRng rng(seed);
  for (long exp = beta[1] + 1; exp < window; ++exp) {
    if (std::binary_search(beta.begin() + 1, beta.end(), exp)) continue;
    // Between beta_i and beta_{i+1} only multiples of e_i keep the class.
    std::size_t idx = 1;
    while (idx + 1 < beta.size() && beta[idx + 1] < exp) ++idx;
    long req = (exp > beta_g) ? 1 : e[idx];
    if (exp % req == 0) y.set_coeff(exp, Rat(rng.small_nonzero()));
  }
  return Parametrization{beta[0], y, false};
}

Parametrization convert_to_normal(long p, const Series& y_in) {
  if (p < 1) throw MathError("parametrization: x-order must be >= 1");
  long pc = p;
  Series y = y_in;
  for (int guard = 0; guard < 100000; ++guard) {
    if (pc == 1) return Parametrization{1, y, true};
    if (y.is_exact_zero())
      throw MathError("parametrization is a multiple cover of an axis");
    auto oy = y.order();
    if (!oy)
      throw TruncationError("normalization: y vanished within the known terms; increase truncation");
    if (*oy < pc) {
      // Swap the coordinate roles: y becomes the pure power (after a
      // reparametrization and an x-scale), t^pc becomes the other series.
      const long np = *oy;
      const Rat c = y.terms().begin()->second;
      Series g = divide(y, Series::monomial(np, c)).plus_const(Rat(-1));
      if (g.terms().empty() && g.is_exact()) {
        y = Series::monomial(pc, Rat(1), y.truncation() == Series::kExact
                                             ? Series::kExact
                                             : y.truncation());
      } else {
        long T = y.is_exact() ? 3 * (pc + y.terms().rbegin()->first) + 64
                              : y.truncation() - np;
        if (T <= 0)
          throw TruncationError("normalization: not enough known terms to swap coordinates");
        Series w = solve_unit_scaling(g.truncated(T), np, T);
        y = series_pow(w, pc, T).shifted(pc);  // t^pc composed with t = s*w(s)
      }
      pc = np;
      continue;
    }
    if (*oy % pc == 0) {
      // Exponent divisible by p: absorbed by y <- y - c*x^(oy/p).
      Series adj = y;
      adj.set_coeff(*oy, Rat(0));
      y = adj;
      continue;
    }
    return Parametrization{pc, y, false};
  }
  throw MathError("normalization did not terminate");
}

}  // namespace planebranch
