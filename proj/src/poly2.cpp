#include "planebranch/poly2.hpp"

#include <algorithm>
#include <sstream>

#include "planebranch/errors.hpp"

namespace planebranch {

Poly2 Poly2::monomial(long i, long j, const Rat& c) {
  Poly2 p;
  if (i < 0 || j < 0) throw MathError("negative exponent in polynomial");
  if (!planebranch::is_zero(c)) p.coef_[{i, j}] = c;
  return p;
}

Poly2 Poly2::constant(const Rat& c) { return monomial(0, 0, c); }

const Rat Poly2::coeff(long i, long j) const {
  auto it = coef_.find({i, j});
  return it == coef_.end() ? Rat(0) : it->second;
}

void Poly2::set_coeff(long i, long j, const Rat& c) {
  if (i < 0 || j < 0) throw MathError("negative exponent in polynomial");
  if (planebranch::is_zero(c))
    coef_.erase({i, j});
  else
    coef_[{i, j}] = c;
}

std::optional<long> Poly2::valuation() const {
  if (coef_.empty()) return std::nullopt;
  long v = -1;
  for (const auto& [m, c] : coef_) {
    long d = m.first + m.second;
    if (v < 0 || d < v) v = d;
  }
  return v;
}

long Poly2::degree() const {
  long d = -1;
  for (const auto& [m, c] : coef_) d = std::max(d, m.first + m.second);
  return d;
}

Poly2 Poly2::operator-() const {
  Poly2 r;
  for (const auto& [m, c] : coef_) r.coef_[m] = -c;
  return r;
}

Poly2 Poly2::operator+(const Poly2& o) const {
  Poly2 r = *this;
  for (const auto& [m, c] : o.coef_) {
    auto it = r.coef_.find(m);
    if (it == r.coef_.end()) {
      r.coef_[m] = c;
    } else {
      it->second += c;
      if (planebranch::is_zero(it->second)) r.coef_.erase(it);
    }
  }
  return r;
}

Poly2 Poly2::operator-(const Poly2& o) const { return *this + (-o); }

Poly2 Poly2::operator*(const Poly2& o) const {
  Poly2 r;
  for (const auto& [ma, ca] : coef_) {
    for (const auto& [mb, cb] : o.coef_) {
      Mono m{ma.first + mb.first, ma.second + mb.second};
      auto it = r.coef_.find(m);
      if (it == r.coef_.end()) {
        Rat prod = ca * cb;
        if (!planebranch::is_zero(prod)) r.coef_[m] = prod;
      } else {
        it->second += ca * cb;
        if (planebranch::is_zero(it->second)) r.coef_.erase(it);
      }
    }
  }
  return r;
}

Poly2 Poly2::operator*(const Rat& c) const {
  Poly2 r;
  if (planebranch::is_zero(c)) return r;
  for (const auto& [m, v] : coef_) r.coef_[m] = v * c;
  return r;
}

Poly2 Poly2::diff_x() const {
  Poly2 r;
  for (const auto& [m, c] : coef_) {
    if (m.first == 0) continue;
    r.coef_[{m.first - 1, m.second}] = c * Rat(m.first);
  }
  return r;
}

Poly2 Poly2::diff_y() const {
  Poly2 r;
  for (const auto& [m, c] : coef_) {
    if (m.second == 0) continue;
    r.coef_[{m.first, m.second - 1}] = c * Rat(m.second);
  }
  return r;
}

namespace {

Rat rat_pow(const Rat& base, long e) {
  Rat r(1);
  for (long k = 0; k < e; ++k) r *= base;
  return r;
}

}  // namespace

Rat Poly2::eval(const Rat& x, const Rat& y) const {
  Rat acc(0);
  for (const auto& [m, c] : coef_)
    acc += c * rat_pow(x, m.first) * rat_pow(y, m.second);
  return acc;
}

Series Poly2::substitute(const Series& sx, const Series& sy) const {
  long mi = 0, mj = 0;
  for (const auto& [m, c] : coef_) {
    mi = std::max(mi, m.first);
    mj = std::max(mj, m.second);
  }
  // Power tables; index 0 holds the exact constant 1.
  std::vector<Series> px, py;
  px.push_back(Series::monomial(0, Rat(1)));
  py.push_back(Series::monomial(0, Rat(1)));
  for (long i = 1; i <= mi; ++i) px.push_back(px.back() * sx);
  for (long j = 1; j <= mj; ++j) py.push_back(py.back() * sy);
  Series acc(Series::kExact);
  for (const auto& [m, c] : coef_) acc = acc + (px[m.first] * py[m.second]) * c;
  return acc;
}

std::string Poly2::str() const {
  if (coef_.empty()) return "0";
  // Render highest total degree first, x-power descending within a degree.
  std::vector<std::pair<Mono, Rat>> ts(coef_.begin(), coef_.end());
  std::sort(ts.begin(), ts.end(), [](const auto& a, const auto& b) {
    long da = a.first.first + a.first.second, db = b.first.first + b.first.second;
    if (da != db) return da > db;
    return a.first.first > b.first.first;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : ts) {
    Rat a = c;
    if (first) {
      if (sgn(a) < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (sgn(a) < 0 ? " - " : " + ");
      if (sgn(a) < 0) a = -a;
    }
    first = false;
    bool has_var = m.first != 0 || m.second != 0;
    bool unit_coeff = (a == 1) && has_var;
    if (!unit_coeff) os << to_string(a);
    if (m.first != 0) {
      if (!unit_coeff) os << "*";
      os << "x";
      if (m.first != 1) os << "^" << m.first;
      unit_coeff = false;  // any following factor needs a '*'
    }
    if (m.second != 0) {
      if (!unit_coeff) os << "*";
      os << "y";
      if (m.second != 1) os << "^" << m.second;
    }
  }
  return os.str();
}

Mono leading_monomial_grlex(const Poly2& f) {
  if (f.is_zero()) throw MathError("leading monomial of the zero polynomial");
  Mono best{-1, -1};
  long bestdeg = -1;
  for (const auto& [m, c] : f.terms()) {
    long d = m.first + m.second;
    if (d > bestdeg || (d == bestdeg && m.first > best.first)) {
      best = m;
      bestdeg = d;
    }
  }
  return best;
}

DivMod divmod_single(const Poly2& g, const Poly2& f) {
  if (f.is_zero()) throw MathError("division by the zero polynomial");
  const Mono lmf = leading_monomial_grlex(f);
  const Rat lcf = f.coeff(lmf.first, lmf.second);
  DivMod out;
  Poly2 work = g;
  while (!work.is_zero()) {
    Mono lm = leading_monomial_grlex(work);
    if (lm.first >= lmf.first && lm.second >= lmf.second) {
      Rat q = work.coeff(lm.first, lm.second) / lcf;
      Poly2 t = Poly2::monomial(lm.first - lmf.first, lm.second - lmf.second, q);
      out.quotient = out.quotient + t;
      work = work - t * f;
    } else {
      Rat c = work.coeff(lm.first, lm.second);
      out.remainder.set_coeff(lm.first, lm.second, c);
      work.set_coeff(lm.first, lm.second, Rat(0));
    }
  }
  return out;
}

Poly2 exact_div(const Poly2& a, const Poly2& b) {
  DivMod dm = divmod_single(a, b);
  if (!dm.remainder.is_zero())
    throw MathError("polynomial division is not exact");
  return dm.quotient;
}

namespace {

// Fraction-free determinant (Bareiss) of a square Poly2 matrix, destroying M.
Poly2 bareiss_det(std::vector<std::vector<Poly2>>& M) {
  const long n = static_cast<long>(M.size());
  if (n == 0) return Poly2::constant(Rat(1));
  int sign = 1;
  Poly2 prev = Poly2::constant(Rat(1));
  for (long k = 0; k + 1 < n; ++k) {
    if (M[k][k].is_zero()) {
      long piv = -1;
      for (long r = k + 1; r < n; ++r)
        if (!M[r][k].is_zero()) {
          piv = r;
          break;
        }
      if (piv < 0) return Poly2();  // singular: zero column below the diagonal
      std::swap(M[k], M[piv]);
      sign = -sign;
    }
    for (long i = k + 1; i < n; ++i) {
      for (long j = k + 1; j < n; ++j)
        M[i][j] = exact_div(M[i][j] * M[k][k] - M[i][k] * M[k][j], prev);
      M[i][k] = Poly2();
    }
    prev = M[k][k];
  }
  Poly2 det = M[n - 1][n - 1];
  return sign < 0 ? -det : det;
}

}  // namespace

Poly2 sylvester_resultant(const std::vector<Poly2>& P, const std::vector<Poly2>& Q) {
  const long dp = static_cast<long>(P.size()) - 1;
  const long dq = static_cast<long>(Q.size()) - 1;
  if (dp < 0 || dq < 0) throw MathError("resultant of an empty polynomial");
  if (P[dp].is_zero() || Q[dq].is_zero())
    throw MathError("resultant needs nonzero leading coefficients");
  const long n = dp + dq;
  std::vector<std::vector<Poly2>> S(n, std::vector<Poly2>(n));
  for (long r = 0; r < dq; ++r)
    for (long k = 0; k <= dp; ++k) S[r][r + k] = P[dp - k];
  for (long r = 0; r < dp; ++r)
    for (long k = 0; k <= dq; ++k) S[dq + r][r + k] = Q[dq - k];
  return bareiss_det(S);
}

Poly2 implicitize(const Series& sx, const Series& sy) {
  if (!sx.is_exact() || !sy.is_exact())
    throw TruncationError("implicitization needs an exact polynomial parametrization");
  auto ox = sx.order();
  if (!ox) throw MathError("implicitization: x(t) must be nonzero");
  // P(t) = x - sx(t), Q(t) = y - sy(t), as polynomials in t over Q[x, y].
  long dp = 0, dq = 0;
  for (const auto& [e, c] : sx.terms()) dp = std::max(dp, e);
  for (const auto& [e, c] : sy.terms()) dq = std::max(dq, e);
  std::vector<Poly2> P(dp + 1), Q(dq + 1);
  P[0] = Poly2::var_x();
  for (const auto& [e, c] : sx.terms()) P[e] = P[e] - Poly2::constant(c);
  Q[0] = Poly2::var_y();
  for (const auto& [e, c] : sy.terms()) Q[e] = Q[e] - Poly2::constant(c);
  if (P[dp].is_zero() || Q[dq].is_zero())
    throw MathError("implicitization: degenerate leading term");
  Poly2 res = sylvester_resultant(P, Q);
  if (res.is_zero()) throw MathError("implicitization: resultant vanished");
  // Normalize: monic in the pure power y^(ord sx).
  const long p = *ox;
  Rat lead = res.coeff(0, p);
  if (is_zero(lead))
    throw MathError("implicitization: missing pure y-power; input may be a multiple cover");
  return res * (Rat(1) / lead);
}

}  // namespace planebranch
