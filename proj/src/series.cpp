#include "planebranch/series.hpp"

#include <sstream>

namespace planebranch {

namespace {

// Saturating arithmetic on truncation orders (kExact acts as +infinity).
long sat_add(long a, long b) {
  if (a >= Series::kExact || b >= Series::kExact) return Series::kExact;
  long s = a + b;
  return s >= Series::kExact ? Series::kExact : s;
}

long sat_mul(long a, long b) {
  if (a >= Series::kExact || b >= Series::kExact) return Series::kExact;
  if (a != 0 && b > Series::kExact / a) return Series::kExact;
  return a * b;
}

// Lower bound for the order of a series: its actual order when a term is
// stored, otherwise the truncation (all we know is "zero at least that far").
long order_lb(const Series& s) {
  auto o = s.order();
  return o ? *o : s.truncation();
}

}  // namespace

Series Series::monomial(long exponent, const Rat& c, long trunc) {
  Series s(trunc);
  if (exponent < trunc && !is_zero(c)) s.coef_[exponent] = c;
  return s;
}

std::optional<long> Series::order() const {
  if (coef_.empty()) return std::nullopt;
  return coef_.begin()->first;
}

long Series::order_or_throw(const std::string& context) const {
  auto o = order();
  if (o) return *o;
  if (is_exact()) throw MathError(context + ": series is exactly zero");
  throw TruncationError(context + ": order undecidable below truncation " +
                        std::to_string(trunc_) + "; increase truncation");
}

const Rat& Series::coeff(long exponent) const {
  static const Rat zero(0);
  if (exponent >= trunc_)
    throw TruncationError("coefficient of t^" + std::to_string(exponent) +
                          " requested beyond truncation " + std::to_string(trunc_));
  auto it = coef_.find(exponent);
  return it == coef_.end() ? zero : it->second;
}

void Series::set_coeff(long exponent, const Rat& value) {
  if (exponent < 0) throw MathError("negative exponent in series");
  if (exponent >= trunc_)
    throw MathError("setting coefficient beyond truncation");
  if (is_zero(value))
    coef_.erase(exponent);
  else
    coef_[exponent] = value;
}

Series Series::truncated(long trunc) const {
  if (trunc >= trunc_) return *this;
  Series r(trunc);
  for (const auto& [e, c] : coef_) {
    if (e >= trunc) break;
    r.coef_[e] = c;
  }
  return r;
}

Series Series::operator-() const {
  Series r(trunc_);
  for (const auto& [e, c] : coef_) r.coef_[e] = -c;
  return r;
}

Series Series::operator+(const Series& o) const {
  long tr = std::min(trunc_, o.trunc_);
  Series r(tr);
  for (const auto& [e, c] : coef_) {
    if (e >= tr) break;
    r.coef_[e] = c;
  }
  for (const auto& [e, c] : o.coef_) {
    if (e >= tr) break;
    auto it = r.coef_.find(e);
    if (it == r.coef_.end()) {
      r.coef_[e] = c;
    } else {
      it->second += c;
      if (is_zero(it->second)) r.coef_.erase(it);
    }
  }
  return r;
}

Series Series::operator-(const Series& o) const { return *this + (-o); }

Series Series::operator*(const Series& o) const {
  // An exact zero annihilates even unknown tails.
  if (is_exact_zero() || o.is_exact_zero()) return Series(kExact);
  long tr = std::min(sat_add(trunc_, order_lb(o)), sat_add(o.trunc_, order_lb(*this)));
  Series r(tr);
  for (const auto& [ea, ca] : coef_) {
    for (const auto& [eb, cb] : o.coef_) {
      long e = ea + eb;
      if (e >= tr) break;  // o.coef_ is sorted: later eb only grow
      auto it = r.coef_.find(e);
      if (it == r.coef_.end()) {
        Rat prod = ca * cb;
        if (!is_zero(prod)) r.coef_[e] = prod;
      } else {
        it->second += ca * cb;
        if (is_zero(it->second)) r.coef_.erase(it);
      }
    }
  }
  return r;
}

Series Series::operator*(const Rat& c) const {
  if (is_zero(c)) return Series(trunc_);
  Series r(trunc_);
  for (const auto& [e, v] : coef_) r.coef_[e] = v * c;
  return r;
}

bool Series::operator==(const Series& o) const {
  return trunc_ == o.trunc_ && coef_ == o.coef_;
}

Series Series::shifted(long k) const {
  Series r(sat_add(trunc_, k));
  for (const auto& [e, c] : coef_) {
    if (e + k < 0) throw MathError("shift would create a negative exponent");
    r.coef_[e + k] = c;
  }
  return r;
}

Series Series::plus_const(const Rat& c) const {
  if (is_zero(c)) return *this;
  if (trunc_ <= 0)
    throw TruncationError("constant term unknown at truncation 0");
  Series r = *this;
  auto it = r.coef_.find(0);
  if (it == r.coef_.end()) {
    r.coef_[0] = c;
  } else {
    it->second += c;
    if (is_zero(it->second)) r.coef_.erase(it);
  }
  return r;
}

Series Series::scaled_var(const Rat& c) const {
  if (is_zero(c)) throw MathError("variable scale must be nonzero");
  Series r(trunc_);
  Rat pw(1);
  long last = 0;
  for (const auto& [e, v] : coef_) {
    for (; last < e; ++last) pw *= c;
    r.coef_[e] = v * pw;
  }
  return r;
}

Series Series::derivative() const {
  Series r(trunc_ == kExact ? kExact : std::max(trunc_ - 1, 0L));
  for (const auto& [e, c] : coef_) {
    if (e == 0) continue;
    r.coef_[e - 1] = c * Rat(e);
  }
  return r;
}

Series Series::compose(const Series& phi) const {
  long op = order_lb(phi);
  if (op < 1) {
    if (phi.order() && *phi.order() < 1)
      throw MathError("composition requires a substitution of order >= 1");
    throw TruncationError("substitution order undecidable; increase truncation");
  }
  // Unknown terms of *this (exponent >= trunc_) enter at order >= trunc_ * op;
  // the unknown tail of phi enters at order >= (ord(f)-1)*op + trunc(phi).
  long tr = sat_mul(trunc_, op);
  if (!coef_.empty()) {
    long of = coef_.begin()->first;
    tr = std::min(tr, sat_add(of > 0 ? (of - 1) * op : 0, phi.trunc_));
  }
  Series acc(tr);
  Series pw = Series::monomial(0, Rat(1));  // phi^0
  long pw_exp = 0;
  for (const auto& [e, c] : coef_) {
    while (pw_exp < e) {
      pw = (pw * phi).truncated(tr);
      ++pw_exp;
    }
    acc = acc + pw * c;
  }
  return acc.truncated(tr);
}

std::string Series::str(const std::string& var) const {
  if (coef_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : coef_) {
    Rat a = c;
    if (first) {
      if (sgn(a) < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (sgn(a) < 0 ? "-" : "+");
      if (sgn(a) < 0) a = -a;
    }
    first = false;
    bool unit_coeff = (a == 1) && e != 0;
    if (!unit_coeff) os << to_string(a);
    if (e != 0) {
      if (!unit_coeff) os << "*";
      os << var;
      if (e != 1) os << "^" << e;
    }
  }
  return os.str();
}

Series invert_unit(const Series& u, long upto) {
  auto o = u.order();
  if (!o || *o != 0) throw MathError("inverse requires a unit series (order 0)");
  long tr = std::min(upto, u.truncation());
  if (tr <= 0) throw TruncationError("no known terms available for inversion");
  Series r(tr);
  const Rat u0 = u.coeff(0);
  r.set_coeff(0, Rat(1) / u0);
  // r_k = -(sum_{0<j<=k} u_j r_{k-j}) / u0, iterating over stored terms of u.
  for (long k = 1; k < tr; ++k) {
    Rat acc(0);
    for (const auto& [j, uj] : u.terms()) {
      if (j == 0) continue;
      if (j > k) break;
      const Rat& rk = r.coeff(k - j);
      if (!is_zero(rk)) acc += uj * rk;
    }
    if (!is_zero(acc)) r.set_coeff(k, -acc / u0);
  }
  return r;
}

int compare_orders(const Series& a, const Series& b) {
  auto oa = a.order();
  auto ob = b.order();
  if (oa && ob) return (*oa > *ob) - (*oa < *ob);
  if (oa && !ob) {
    if (b.truncation() > *oa) return -1;
  } else if (!oa && ob) {
    if (a.truncation() > *ob) return 1;
  }
  throw TruncationError("order comparison undecidable; increase truncation");
}

Series divide(const Series& a, const Series& b) {
  long ob = b.order_or_throw("division");
  if (a.is_exact_zero()) return Series(Series::kExact);
  auto oa = a.order();
  if (oa && *oa < ob)
    throw MathError("division would produce a pole (numerator order " +
                    std::to_string(*oa) + " < denominator order " + std::to_string(ob) + ")");
  if (!oa) {
    // a is zero as far as it is known: the quotient is zero that far too.
    long tr = a.truncation() - ob;
    return Series(std::max(tr, 0L));
  }
  if (b.terms().size() == 1) {
    // Monomial divisor: an exact shift-and-scale, no inversion needed.
    return a.shifted(-ob) * (Rat(1) / b.coeff(ob));
  }
  long goal = std::min(a.truncation(), b.truncation());
  if (goal >= Series::kExact)
    throw MathError("division by a non-monomial exact series needs a finite "
                    "truncation; truncate an operand first");
  Series inv = invert_unit(b.shifted(-ob), goal);
  return (a * inv).shifted(-ob);
}

}  // namespace planebranch
