#include "planebranch/resolution.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "planebranch/errors.hpp"

namespace planebranch {

namespace {

long decided_min_order(const Series& a, const Series& b) {
  int c = compare_orders(a, b);
  return c <= 0 ? *a.order() : *b.order();
}

bool contains(const std::vector<int>& v, int x) {
  return std::find(v.begin(), v.end(), x) != v.end();
}

struct Engine {
  std::vector<BlowupStep> steps;
  std::vector<LocalState> states;

  // Runs the trace at working truncation W. Throws TruncationError when W is
  // not enough to decide some step.
  void run(const Parametrization& par, long W) {
    LocalState st;
    st.sx = par.x_series().truncated(W);
    st.sy = par.y.truncated(W);
    for (int i = 1; i <= 100000; ++i) {
      long m = decided_min_order(st.sx, st.sy);
      if (m < 1) throw MathError("blow-up: strict transform does not pass through the center");
      if (m == 1 && !(st.bx && st.by)) {
        int c = compare_orders(st.sx, st.sy);
        bool tangent_to_x_axis = c < 0 && st.by != 0;   // ord sx < ord sy: tangent y = 0
        bool tangent_to_y_axis = c > 0 && st.bx != 0;   // ord sy < ord sx: tangent x = 0
        if (!tangent_to_x_axis && !tangent_to_y_axis) return;
      }
      states.push_back(st);
      BlowupStep step;
      step.index = i;
      if (st.bx) step.center_divisors.push_back(st.bx);
      if (st.by) step.center_divisors.push_back(st.by);
      std::sort(step.center_divisors.begin(), step.center_divisors.end());
      step.strict_mult = m;
      step.reduced_total_mult = m + static_cast<long>(step.center_divisors.size());
      if (compare_orders(st.sy, st.sx) >= 0) {
        step.chart = 'x';
        Series q = divide(st.sy, st.sx);
        Rat c = q.coeff(0);
        st.sy = q.plus_const(-c);
        st.by = is_zero(c) ? st.by : 0;
        st.bx = i;
        step.translation = c;
      } else {
        step.chart = 'y';
        Series q = divide(st.sx, st.sy);
        Rat c = q.coeff(0);
        st.sx = q.plus_const(-c);
        st.bx = is_zero(c) ? st.bx : 0;
        st.by = i;
        step.translation = c;
      }
      steps.push_back(step);
    }
    throw MathError("blow-up: resolution did not terminate");
  }
};

void validate(const ResolutionData& r, long claimed_conductor, long multiplicity) {
  const long N = r.N();
  if (N == 0) return;
  if (r.steps[0].strict_mult != multiplicity)
    throw MathError("internal consistency: first multiplicity differs from beta_0");
  long noether = 0;
  for (long i = 0; i < N; ++i) {
    const auto& s = r.steps[i];
    noether += s.strict_mult * (s.strict_mult - 1);
    if (i + 1 < N && r.steps[i + 1].strict_mult > s.strict_mult)
      throw MathError("internal consistency: multiplicities increase");
    for (int d : s.center_divisors)
      if (d < 1 || d >= s.index)
        throw MathError("internal consistency: bad center divisor");
    if (i >= 1 && !contains(s.center_divisors, s.index - 1))
      throw MathError("internal consistency: center misses the previous divisor");
  }
  if (noether != claimed_conductor)
    throw MathError("internal consistency: multiplicity sequence does not match the conductor");
  // Each m_i equals the sum of the m_j over the later centers on D_i, plus one
  // for the final transverse point on D_N.
  for (long i = 1; i <= N; ++i) {
    long sum = (i == N) ? 1 : 0;
    for (long j = i; j < N; ++j)
      if (contains(r.steps[j].center_divisors, static_cast<int>(i)))
        sum += r.steps[j].strict_mult;
    if (sum != r.steps[i - 1].strict_mult)
      throw MathError("internal consistency: proximity equality fails");
  }
  // Off-diagonal -1 entries on a row must form one contiguous run starting
  // right after the diagonal.
  for (long i = 1; i <= N; ++i) {
    bool run_over = false;
    for (long j = i + 1; j <= N; ++j) {
      bool prox = r.proximity.at(i - 1, j - 1) == -1;
      if (prox && run_over)
        throw MathError("internal consistency: proximity row is not contiguous");
      if (!prox && j == i + 1 && i < N)
        throw MathError("internal consistency: next center misses the new divisor");
      if (!prox) run_over = true;
    }
  }
  if (!(r.proximity * r.proximity_inverse == IntMat::identity(N)))
    throw MathError("internal consistency: proximity inverse");
  // The dual graph must be a tree.
  if (static_cast<long>(r.dual_edges.size()) != N - 1)
    throw MathError("internal consistency: dual graph edge count");
  std::vector<int> parent(N + 1);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (auto [a, b] : r.dual_edges) {
    int ra = find(a), rb = find(b);
    if (ra == rb) throw MathError("internal consistency: dual graph has a cycle");
    parent[ra] = rb;
  }
}

ResolutionData assemble(std::vector<BlowupStep> steps) {
  ResolutionData r;
  r.steps = std::move(steps);
  const long N = r.N();
  r.proximity = IntMat(N, N);
  for (long i = 0; i < N; ++i) r.proximity.at(i, i) = 1;
  for (const auto& s : r.steps)
    for (int d : s.center_divisors) r.proximity.at(d - 1, s.index - 1) = -1;
  r.proximity_inverse = inverse_unitriangular(r.proximity);

  r.self_intersections.assign(N, -1);
  for (const auto& s : r.steps)
    for (int d : s.center_divisors) r.self_intersections[d - 1] -= 1;

  for (long j = 1; j <= N; ++j) {
    for (int i : r.steps[j - 1].center_divisors) {
      bool separated = false;
      for (long k = j + 1; k <= N && !separated; ++k)
        separated = contains(r.steps[k - 1].center_divisors, i) &&
                    contains(r.steps[k - 1].center_divisors, static_cast<int>(j));
      if (!separated) r.dual_edges.emplace_back(i, static_cast<int>(j));
    }
  }
  std::sort(r.dual_edges.begin(), r.dual_edges.end());

  IntMat book(N, N);
  for (long i = 0; i < N; ++i) book.at(i, i) = r.self_intersections[i];
  for (auto [a, b] : r.dual_edges) {
    book.at(a - 1, b - 1) = 1;
    book.at(b - 1, a - 1) = 1;
  }
  const IntMat& E = r.proximity;
  if (book == -(E * E.transposed())) {
    r.intersection_convention = "-E*Et";
  } else if (book == -(E.transposed() * E)) {
    r.intersection_convention = "-Et*E";
  } else {
    throw MathError("internal consistency: intersection matrix mismatch");
  }
  r.intersection = book;

  r.n_row.assign(N, 1);
  for (const auto& s : r.steps)
    for (int d : s.center_divisors) r.n_row[d - 1] += 1;
  r.final_attach = static_cast<int>(N);
  return r;
}

}  // namespace

bool ResolutionData::adjacent(int i, int j) const {
  if (i > j) std::swap(i, j);
  return std::find(dual_edges.begin(), dual_edges.end(), std::make_pair(i, j)) !=
         dual_edges.end();
}

Trace resolve_trace(const Parametrization& par) {
  Trace tr;
  if (par.smooth) {
    tr.data.intersection_convention = "-E*Et";
    return tr;
  }
  CharExponents ce = char_exponents(par);
  const long cond = conductor(ce);
  const long avail = par.truncation();
  long W = ce.beta.back() + 2 * ce.beta[0] + 32;
  for (int attempt = 0;; ++attempt, W *= 2) {
    Engine eng;
    try {
      eng.run(par, std::min(W, avail));
    } catch (const TruncationError&) {
      if (W >= avail)
        throw TruncationError(
            "resolution: the parametrization is not known far enough; "
            "increase truncation");
      if (attempt >= 8 || W > 4 * (cond + ce.beta.back() + 64))
        throw MathError("internal consistency: resolution working precision exploded");
      continue;
    }
    tr.data = assemble(std::move(eng.steps));
    tr.states = std::move(eng.states);
    validate(tr.data, cond, ce.multiplicity());
    return tr;
  }
}

ResolutionData resolve(const Parametrization& par) { return resolve_trace(par).data; }

}  // namespace planebranch
