#include "planebranch/saito.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

#include "planebranch/errors.hpp"
#include "planebranch/matrix.hpp"

namespace planebranch {

namespace {

long floor_div(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

// ---------------------------------------------------------------------------
// replay of direction components through the chart/translation record

struct ReplayComp {
  Series cx, cy;
  std::string label;
  bool alive = true;
  int attach = 0;
  int corner_with = 0;

  void die(int at, int corner) {
    alive = false;
    attach = at;
    corner_with = corner;
  }
};

DeltaPData replay(const ResolutionData& r, const Direction& d, long comp_trunc) {
  const long N = r.N();
  std::vector<ReplayComp> comps;
  for (const auto& c : d.components) {
    ReplayComp rc;
    // Axis components stay exact (they never meet a series inversion); other
    // components get the working truncation so divisions stay finite.
    rc.cx = (c.kind == DirComponent::Kind::Curve) ? c.cx.truncated(comp_trunc) : c.cx;
    rc.cy = (c.kind == DirComponent::Kind::Curve) ? c.cy.truncated(comp_trunc) : c.cy;
    rc.label = c.label;
    comps.push_back(std::move(rc));
  }

  DeltaPData out;
  int bx = 0, by = 0;  // divisor indices of the local axes, as in the trace
  for (const auto& step : r.steps) {
    const int i = step.index;
    long alive = std::count_if(comps.begin(), comps.end(),
                               [](const ReplayComp& c) { return c.alive; });
    out.delta.push_back(static_cast<long>(step.center_divisors.size()) + alive);
    const Rat& c = step.translation;
    for (auto& comp : comps) {
      if (!comp.alive) continue;
      if (step.chart == 'x') {
        if (comp.cx.is_exact_zero()) {
          comp.die(i, bx);  // the component is the local {x=0}
          continue;
        }
        if (compare_orders(comp.cy, comp.cx) < 0) {
          comp.die(i, bx);  // vertical tangent: lands on the {x=0} side
          continue;
        }
        Series q = divide(comp.cy, comp.cx);
        Rat cp = q.coeff(0);
        if (cp != c) {
          comp.die(i, is_zero(cp) ? by : 0);
          continue;
        }
        comp.cy = q.plus_const(-cp);
      } else {
        if (comp.cy.is_exact_zero()) {
          comp.die(i, by);
          continue;
        }
        if (compare_orders(comp.cx, comp.cy) < 0) {
          comp.die(i, by);
          continue;
        }
        Series q = divide(comp.cx, comp.cy);
        Rat cp = q.coeff(0);
        if (cp != c) {
          comp.die(i, is_zero(cp) ? bx : 0);
          continue;
        }
        comp.cx = q.plus_const(-cp);
      }
    }
    if (step.chart == 'x') {
      by = is_zero(c) ? by : 0;
      bx = i;
    } else {
      bx = is_zero(c) ? bx : 0;
      by = i;
    }
  }

  for (auto& comp : comps)
    if (comp.alive) comp.die(static_cast<int>(N), 0);

  for (const auto& comp : comps) {
    ComponentFate f;
    f.label = comp.label;
    f.attach = comp.attach;
    f.corner_with = comp.corner_with;
    f.meets.push_back(comp.attach);
    if (comp.corner_with != 0) f.meets.push_back(comp.corner_with);
    std::sort(f.meets.begin(), f.meets.end());
    out.fates.push_back(std::move(f));
  }

  for (long k = 0; k < N; ++k)
    out.v.push_back(floor_div(r.steps[k].strict_mult - out.delta[k], 2) + 1);
  std::vector<Int> vi(out.v.begin(), out.v.end());
  for (const Int& x : r.proximity.mul_vec(vi)) out.p.push_back(to_long(x));
  if (out.p.back() != 0)
    throw MathError("internal consistency: the last entry of the p-vector must be 0");
  return out;
}

}  // namespace

DeltaPData delta_p_data(const ResolutionData& r, const Direction& d) {
  if (r.N() == 0)
    throw MathError("delta/p data needs a singular curve (the resolution is empty)");
  bool has_custom = !d.axes_only();
  long W = 2 * r.N() + 32;
  for (int attempt = 0;; ++attempt, W *= 2) {
    try {
      return replay(r, d, W);
    } catch (const TruncationError&) {
      if (!has_custom || attempt >= 6) throw;
      // Only exact non-axis components benefit from a wider working window.
      bool retryable = false;
      for (const auto& c : d.components)
        retryable |= c.kind == DirComponent::Kind::Curve && c.cx.is_exact() &&
                     c.cy.is_exact() && c.cx.truncation() > W;
      if (!retryable) throw;
    }
  }
}

std::vector<long> delta_sequence(const ResolutionData& r, const Direction& d) {
  return delta_p_data(r, d).delta;
}

std::vector<long> p_vector(const ResolutionData& r, const std::vector<long>& delta) {
  if (static_cast<long>(delta.size()) != r.N())
    throw MathError("p-vector: delta length differs from the resolution length");
  std::vector<Int> v;
  for (long k = 0; k < r.N(); ++k)
    v.push_back(floor_div(r.steps[k].strict_mult - delta[k], 2) + 1);
  std::vector<long> p;
  for (const Int& x : r.proximity.mul_vec(v)) p.push_back(to_long(x));
  return p;
}

// ---------------------------------------------------------------------------
// structural properties

PropertyReport check_combinatorial_properties(const Trace& tr, const Direction& d,
                                              const DeltaPData& dp) {
  const ResolutionData& r = tr.data;
  const long N = r.N();
  PropertyReport rep;

  for (long i = 1; i <= N; ++i) {
    long pi = dp.p[i - 1];
    if (pi >= 0) continue;
    MinusOneWitness w;
    w.index = static_cast<int>(i);
    w.case_tag = '?';
    if (pi == -1 && i < N) {
      long m = r.steps[i - 1].strict_mult;
      long n = r.n_row[i - 1];
      bool shape = dp.delta[i - 1] == 2 && dp.delta[i] == 1 && m % 2 == 1;
      if (shape && n == 2) {
        w.case_tag = 'a';
      } else if (shape && n == 3) {
        const LocalState& st = tr.states[i - 1];
        CharExponents ce = char_exponents_general(st.sx, st.sy);
        if (ce.beta.size() >= 2 && ce.beta[1] % 2 == 0) w.case_tag = 'b';
      }
    }
    if (w.case_tag == '?') rep.prop1_ok = false;
    rep.minus_ones.push_back(w);
  }

  for (auto [a, b] : r.dual_edges)
    if (dp.p[a - 1] == -1 && dp.p[b - 1] == -1) {
      rep.prop2_ok = false;
      rep.bad_adjacent.emplace_back(a, b);
    }

  // Pruned graph: drop D_N and every p = -1 vertex; each remaining component
  // needs a vertex with p > 0 or one met by a direction component.
  std::vector<int> parent(N + 1);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  auto kept = [&](int v) { return v < N && dp.p[v - 1] != -1; };
  for (auto [a, b] : r.dual_edges)
    if (kept(a) && kept(b)) parent[find(a)] = find(b);
  std::map<int, std::vector<int>> groups;
  for (int v = 1; v < N; ++v)
    if (kept(v)) groups[find(v)].push_back(v);
  for (auto& [root, vs] : groups) {
    Prop3Component comp;
    comp.vertices = vs;
    for (int v : vs)
      if (dp.p[v - 1] > 0) {
        comp.witness = v;
        comp.witness_kind = "p_positive";
        break;
      }
    if (comp.witness == 0) {
      for (int v : vs) {
        bool met = false;
        for (const auto& f : dp.fates)
          met |= std::find(f.meets.begin(), f.meets.end(), v) != f.meets.end();
        if (met) {
          comp.witness = v;
          comp.witness_kind = "direction";
          break;
        }
      }
    }
    if (comp.witness == 0) rep.prop3_ok = false;
    rep.components.push_back(std::move(comp));
  }
  (void)d;
  return rep;
}

std::optional<long> p1_table(long p, long q, long delta1, long delta2) {
  if (p < 2 || q <= p || std::gcd(p, q) != 1) return std::nullopt;
  const bool pe = p % 2 == 0, qe = q % 2 == 0;
  if (pe && qe) return std::nullopt;
  const long n = (q + (q - p) - 1) / (q - p);  // ceil(q / (q - p))
  if (n == 2) {
    if (delta1 == 0 && delta2 == 1) return pe ? 1 : 0;
    if (delta1 == 1 && delta2 == 1) return 0;
    if (delta1 == 1 && delta2 == 2) return pe ? 0 : 1;
    if (delta1 == 2 && delta2 == 1) return pe ? 0 : -1;
    if (delta1 == 2 && delta2 == 2) return 0;
    return std::nullopt;
  }
  const bool ne = n % 2 == 0;
  // Columns by the parities of (p, q): both odd / p even / q even.
  auto pick = [&](long oo, long eo, long oe) {
    if (!pe && !qe) return oo;
    return pe ? eo : oe;
  };
  long val;
  if (delta1 == 0 && delta2 == 1)
    val = pick(1, ne ? floor_div(n - 2, 2) : floor_div(n - 1, 2),
               ne ? floor_div(n - 2, 2) : floor_div(n - 3, 2));
  else if (delta1 == 1 && delta2 == 1)
    val = pick(1, ne ? floor_div(n - 4, 2) : floor_div(n - 3, 2),
               ne ? floor_div(n - 2, 2) : floor_div(n - 3, 2));
  else if (delta1 == 1 && delta2 == 2)
    val = pick(1, ne ? floor_div(n - 2, 2) : floor_div(n - 1, 2),
               ne ? floor_div(n, 2) : floor_div(n - 1, 2));
  else if (delta1 == 2 && delta2 == 1)
    val = pick(0, ne ? floor_div(n - 4, 2) : floor_div(n - 3, 2),
               ne ? floor_div(n - 4, 2) : floor_div(n - 5, 2));
  else if (delta1 == 2 && delta2 == 2)
    val = pick(0, ne ? floor_div(n - 2, 2) : floor_div(n - 1, 2),
               ne ? floor_div(n - 2, 2) : floor_div(n - 3, 2));
  else
    return std::nullopt;
  return val;
}

// ---------------------------------------------------------------------------
// numbered dual tree / multiplicity identity

NumberedDualTree numbered_dual_tree(const ResolutionData& r, const DeltaPData& dp) {
  NumberedDualTree t;
  t.N = r.N();
  for (long i = 1; i <= t.N; ++i) {
    TreeNumber n;
    if (dp.p[i - 1] == -1) {
      n.infinite = true;
    } else {
      long met = 0;
      for (const auto& f : dp.fates)
        met += std::find(f.meets.begin(), f.meets.end(), i) != f.meets.end();
      n.value = dp.p[i - 1] + met;
    }
    t.numbers.push_back(n);
  }
  t.edges = r.dual_edges;
  t.curve_attach = r.final_attach;
  t.last_dicritical = true;
  t.direction_attach = dp.fates;
  return t;
}

FoliationIdentity foliation_mult_identity(const ResolutionData& r, const DeltaPData& dp) {
  const long N = r.N();
  if (N == 0) throw MathError("multiplicity identity needs a singular curve");
  FoliationIdentity id;
  const long delta1 = dp.delta[0];
  for (long i = 1; i < N; ++i)
    id.lhs += dp.p[i - 1] * to_long(r.proximity_inverse.at(0, i - 1));
  id.lhs += delta1 - 1;
  id.rhs = floor_div(r.steps[0].strict_mult + delta1, 2);
  id.equal = id.lhs == id.rhs;
  return id;
}

// ---------------------------------------------------------------------------
// 1-forms and tangency

Poly2 OneForm::assembled_A() const { return y_factor ? A * Poly2::var_y() : A; }
Poly2 OneForm::assembled_B() const { return x_factor ? B * Poly2::var_x() : B; }

std::optional<long> OneForm::valuation() const {
  auto va = assembled_A().valuation();
  auto vb = assembled_B().valuation();
  if (va && vb) return std::min(*va, *vb);
  return va ? va : vb;
}

std::string OneForm::str() const {
  return "(" + assembled_A().str() + ") dx + (" + assembled_B().str() + ") dy";
}

bool is_tangent(const Poly2& f, const OneForm& w, Poly2* cofactor) {
  if (f.is_zero()) throw MathError("tangency: the curve polynomial is zero");
  Poly2 g = w.assembled_A() * f.diff_y() - w.assembled_B() * f.diff_x();
  if (g.is_zero()) {
    if (cofactor) *cofactor = Poly2();
    return true;
  }
  DivMod dm = divmod_single(g, f);
  if (!dm.remainder.is_zero()) return false;
  if (cofactor) *cofactor = dm.quotient;
  return true;
}

bool is_tangent(const Parametrization& par, const OneForm& w) {
  Series sx = par.x_series();
  Series pull = w.assembled_A().substitute(sx, par.y) * sx.derivative() +
                w.assembled_B().substitute(sx, par.y) * par.y.derivative();
  return pull.terms().empty();
}

// ---------------------------------------------------------------------------
// minimal valuation: shared kernel scan

namespace {

struct ColumnKey {
  bool is_A;
  long i, j;
};

std::vector<ColumnKey> monomial_columns(long D) {
  std::vector<ColumnKey> cols;
  for (int block = 0; block < 2; ++block)
    for (long deg = 0; deg <= D; ++deg)
      for (long i = 0; i <= deg; ++i)
        cols.push_back({block == 0, i, deg - i});
  return cols;
}

// Extract the best (minimal-valuation) form from the kernel of M.
SaitoResult best_kernel_form(const RatMat& M, const std::vector<ColumnKey>& cols,
                             bool x_factor, bool y_factor, const std::string& what) {
  auto basis = kernel_basis(M);
  if (basis.empty())
    throw BoundError("no tangent 1-form found within the degree bound while "
                     "computing " + what + "; increase the degree bound");
  SaitoResult best;
  bool have = false;
  for (const auto& vec : basis) {
    OneForm w;
    w.x_factor = x_factor;
    w.y_factor = y_factor;
    for (std::size_t k = 0; k < cols.size(); ++k) {
      if (is_zero(vec[k])) continue;
      if (cols[k].is_A)
        w.A.set_coeff(cols[k].i, cols[k].j, w.A.coeff(cols[k].i, cols[k].j) + vec[k]);
      else
        w.B.set_coeff(cols[k].i, cols[k].j, w.B.coeff(cols[k].i, cols[k].j) + vec[k]);
    }
    auto val = w.valuation();
    if (!val) continue;
    if (!have || *val < best.nu_min) {
      best.nu_min = *val;
      best.certificate = w;
      have = true;
    }
  }
  if (!have)
    throw BoundError("the tangent-form kernel is degenerate while computing " + what);
  return best;
}

SaitoResult run_equation(const Poly2& f, const Direction& d, long D) {
  const bool xf = d.has_axis_x();
  const bool yf = d.has_axis_y();
  const Poly2 fx = f.diff_x();
  const Poly2 fy = f.diff_y();
  auto cols = monomial_columns(D);
  // Column k: normal form modulo f of the tangency polynomial contribution of
  // one unknown coefficient.
  std::vector<Poly2> reduced;
  std::map<Mono, long> row_of;
  for (const auto& ck : cols) {
    Poly2 base = ck.is_A ? Poly2::monomial(ck.i, ck.j + (yf ? 1 : 0), Rat(1)) * fy
                         : Poly2::monomial(ck.i + (xf ? 1 : 0), ck.j, Rat(1)) * (-fx);
    Poly2 nf = divmod_single(base, f).remainder;
    for (const auto& [m, c] : nf.terms())
      if (!row_of.count(m)) row_of[m] = static_cast<long>(row_of.size());
    reduced.push_back(std::move(nf));
  }
  RatMat M(static_cast<long>(row_of.size()), static_cast<long>(cols.size()));
  for (std::size_t k = 0; k < reduced.size(); ++k)
    for (const auto& [m, c] : reduced[k].terms())
      M.at(row_of[m], static_cast<long>(k)) = c;
  SaitoResult res = best_kernel_form(M, cols, xf, yf, "the equation-route minimum");
  res.route = "equation";
  res.degree_bound_used = D;
  return res;
}

SaitoResult run_param(const Parametrization& par, const Direction& d, long D, long M) {
  const bool xf = d.has_axis_x();
  const bool yf = d.has_axis_y();
  auto cols = monomial_columns(D);

  struct Source {
    Series gx, gy;
  };
  std::vector<Source> sources;
  sources.push_back({par.x_series(), par.y});
  for (const auto& c : d.components)
    if (c.kind == DirComponent::Kind::Curve) sources.push_back({c.cx, c.cy});

  const long rows_per = M + 1;
  RatMat mat(rows_per * static_cast<long>(sources.size()), static_cast<long>(cols.size()));
  for (std::size_t s = 0; s < sources.size(); ++s) {
    const Series& gx = sources[s].gx;
    const Series& gy = sources[s].gy;
    const Series dgx = gx.derivative().truncated(M + 1);
    const Series dgy = gy.derivative().truncated(M + 1);
    std::vector<Series> px{Series::monomial(0, Rat(1), M + 2)};
    std::vector<Series> py{Series::monomial(0, Rat(1), M + 2)};
    for (long i = 1; i <= D; ++i) px.push_back((px.back() * gx).truncated(M + 2));
    for (long j = 1; j <= D; ++j) py.push_back((py.back() * gy).truncated(M + 2));
    for (std::size_t k = 0; k < cols.size(); ++k) {
      const auto& ck = cols[k];
      Series col = (px[ck.i] * py[ck.j]).truncated(M + 1);
      if (ck.is_A) {
        if (yf) col = (col * gy).truncated(M + 1);
        col = col * dgx;
      } else {
        if (xf) col = (col * gx).truncated(M + 1);
        col = col * dgy;
      }
      if (col.truncation() <= M)
        throw TruncationError(
            "jet rows need the pullback through order " + std::to_string(M) +
            " but it is only known below " + std::to_string(col.truncation()) +
            "; increase the input truncation or lower the jet order");
      for (const auto& [e, ccoef] : col.terms()) {
        if (e > M) break;
        mat.at(rows_per * static_cast<long>(s) + e, static_cast<long>(k)) = ccoef;
      }
    }
  }
  SaitoResult res = best_kernel_form(mat, cols, xf, yf, "the parametrization-route minimum");
  res.route = "parametrization";
  res.degree_bound_used = D;
  res.jet_order_used = M;
  return res;
}

}  // namespace

SaitoResult min_saito_valuation(const Poly2& f, const Direction& d, const SaitoOptions& opt) {
  if (!d.axes_only())
    throw MathError("the equation route supports axis directions only; "
                    "use the parametrization route for curve components");
  auto val = f.valuation();
  if (!val || *val < 1)
    throw MathError("the curve polynomial must vanish at the origin");
  const long D = opt.degree_bound > 0 ? opt.degree_bound : f.degree() + 2;
  SaitoResult res = run_equation(f, d, D);
  if (opt.check_stability) {
    SaitoResult res2 = run_equation(f, d, 2 * D);
    res.stability_checked = true;
    res.stable = res2.nu_min == res.nu_min;
    if (res2.nu_min < res.nu_min) {
      res2.stability_checked = true;
      res2.stable = false;
      return res2;
    }
  }
  return res;
}

SaitoResult min_saito_valuation(const Parametrization& par, const Direction& d,
                                const SaitoOptions& opt) {
  const long cond = conductor(char_exponents(par));
  const long D = opt.degree_bound > 0 ? opt.degree_bound : cond + 2;
  const long M = opt.jet_order > 0 ? opt.jet_order : cond + 2 * D;
  SaitoResult res = run_param(par, d, D, M);
  if (opt.check_stability) {
    const long D2 = 2 * D;
    const long M2 = opt.jet_order > 0 ? 2 * opt.jet_order : cond + 2 * D2;
    SaitoResult res2 = run_param(par, d, D2, M2);
    res.stability_checked = true;
    res.stable = res2.nu_min == res.nu_min;
    if (res2.nu_min < res.nu_min) {
      res2.stability_checked = true;
      res2.stable = false;
      return res2;
    }
  }
  return res;
}

// ---------------------------------------------------------------------------
// basis criterion

namespace {

bool divisible_by_var(const Poly2& p, bool x_var) {
  for (const auto& [m, c] : p.terms())
    if ((x_var ? m.first : m.second) < 1) return false;
  return true;
}

bool tangent_to_curve_and_axes(const Poly2& f, const Direction& d, const OneForm& w) {
  if (!is_tangent(f, w)) return false;
  if (d.has_axis_x() && !divisible_by_var(w.assembled_B(), true)) return false;
  if (d.has_axis_y() && !divisible_by_var(w.assembled_A(), false)) return false;
  return true;
}

}  // namespace

CriterionReport check_saito_criterion(const OneForm& w1, const OneForm& w2, const Poly2& f,
                                      const Direction& d) {
  if (!d.axes_only())
    throw MathError("the basis criterion supports axis directions only");
  CriterionReport rep;
  rep.omega1_tangent = tangent_to_curve_and_axes(f, d, w1);
  rep.omega2_tangent = tangent_to_curve_and_axes(f, d, w2);

  Poly2 wedge = w1.assembled_A() * w2.assembled_B() - w2.assembled_A() * w1.assembled_B();
  Poly2 F = f;
  if (d.has_axis_x()) F = F * Poly2::var_x();
  if (d.has_axis_y()) F = F * Poly2::var_y();
  auto valF = F.valuation();
  if (!valF) throw MathError("the curve polynomial is zero");
  rep.expected_valuation = *valF;
  rep.wedge_valuation = wedge.valuation();
  rep.valuation_ok = rep.wedge_valuation && *rep.wedge_valuation == rep.expected_valuation;
  if (!wedge.is_zero()) {
    DivMod dm = divmod_single(wedge, F);
    if (dm.remainder.is_zero()) {
      rep.divides = true;
      rep.unit = !is_zero(dm.quotient.eval(Rat(0), Rat(0)));
      rep.u_str = dm.quotient.str();
    }
  }
  rep.is_basis = rep.omega1_tangent && rep.omega2_tangent && rep.valuation_ok &&
                 rep.divides && rep.unit;
  return rep;
}

// ---------------------------------------------------------------------------
// generic-minimum verification

GenericReport verify_generic_minimum(const CharExponents& c, const Direction& d,
                                     const std::vector<std::uint64_t>& seeds,
                                     SaitoOptions opt) {
  GenericReport rep;
  rep.char_exponents = c.beta;
  rep.direction = d.describe();
  opt.check_stability = true;
  const long expected = floor_div(c.multiplicity() + d.count(), 2);
  bool all = !seeds.empty();
  for (std::uint64_t seed : seeds) {
    Parametrization par = generic_parametrization(c, seed);
    SaitoResult res = min_saito_valuation(par, d, opt);
    GenericCheck chk;
    chk.seed = seed;
    chk.expected = expected;
    chk.got = res.nu_min;
    chk.match = chk.got == chk.expected;
    chk.stable = res.stable;
    all = all && chk.match && chk.stable;
    rep.checks.push_back(chk);
  }
  rep.all_match = all;
  return rep;
}

}  // namespace planebranch
