#pragma once

// The headline computation: per-center contribution sigma, the generic moduli
// dimension as the sum of sigma over the reduced total multiplicities of the
// resolution, the two-valuation dimension formula, closed forms for one-pair
// classes, and the rigidity classifier.

#include <vector>

#include "planebranch/curve.hpp"
#include "planebranch/resolution.hpp"

namespace planebranch {

struct DimensionReport {
  long N = 0;
  std::vector<long> reduced_total;  // per step
  std::vector<long> sigma_values;   // per step
  long total = 0;
  bool rigid = false;               // total == 0
};

// sigma(k) = (k-3)^2/4 for odd k, (k-2)(k-4)/4 for even k (exact; the parity
// branch is always divisible by 4). Requires k >= 2: the engine never feeds a
// center of reduced multiplicity 1 (a smooth curve resolves in zero steps and
// every later center lies on at least one divisor).
long sigma(long k);

// (nu1-1)(nu1-2)/2 + (nu2-1)(nu2-2)/2.
long dimension_pair(long nu1, long nu2);

DimensionReport generic_dimension(const ResolutionData& r);

// Closed form for the class (n, nh+1): sigma(n) + (h-1)*sigma(n+1).
long closed_form_nh(long n, long h);

struct RigidityEntry {
  CharExponents char_exps;
  Semigroup semigroup;
  long dimension = 0;
  bool rigid = false;
};

// Enumerate singular classes with multiplicity beta_0 in [2, max_mult] whose
// semigroup generators all lie <= generator_bound; evaluate the dimension of
// each via a generic member. Deterministic order (lexicographic in beta).
std::vector<RigidityEntry> classify_rigidity(long max_mult, long generator_bound);

}  // namespace planebranch
