#pragma once

// Auxiliary-foliation combinatorics and the Saito-module valuation oracle.
//
// Combinatorial side: the delta-sequence of a direction along the resolution,
// the p-vector E*v with v_i = floor((m_i - delta_i)/2) + 1, its structural
// properties, the closed-form cross-check for one-pair curves, the numbered
// dual tree, and the multiplicity identity linking the p-vector to
// floor(nu(S_d)/2).
//
// Analytic side: minimal valuation over 1-forms tangent to S_d, computed as
// an exact linear-algebra problem in two encodings (polynomial divisibility
// for curve equations; vanishing jets of the pullback for parametrizations),
// plus the determinant criterion for a basis of the tangent-form module.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "planebranch/curve.hpp"
#include "planebranch/direction.hpp"
#include "planebranch/poly2.hpp"
#include "planebranch/resolution.hpp"

namespace planebranch {

// ---------------------------------------------------------------------------
// delta-sequence / p-vector

// Fate of one direction component in the resolved surface: the divisor whose
// blow-up separated it from the curve's center chain (or the last divisor for
// survivors), plus the second divisor when it lands on a corner.
struct ComponentFate {
  std::string label;
  int attach = 0;       // divisor index (1-based)
  int corner_with = 0;  // second divisor at a corner, 0 when attached at a free point
  std::vector<int> meets;  // divisors met, derived from attach/corner_with
};

struct DeltaPData {
  std::vector<long> delta;  // delta_1 = |d|, delta_i for i >= 2 from the replay
  std::vector<long> v;      // v_i = floor((m_i - delta_i)/2) + 1
  std::vector<long> p;      // proximity * v
  std::vector<ComponentFate> fates;
};

DeltaPData delta_p_data(const ResolutionData& r, const Direction& d);

// Thin views matching the operation granularity used elsewhere.
std::vector<long> delta_sequence(const ResolutionData& r, const Direction& d);
std::vector<long> p_vector(const ResolutionData& r, const std::vector<long>& delta);

// ---------------------------------------------------------------------------
// structural properties of the p-vector

struct MinusOneWitness {
  int index = 0;   // 1-based divisor index with p_i = -1
  char case_tag;   // 'a' or 'b'; '?' when neither case matched (a failure)
};

struct Prop3Component {
  std::vector<int> vertices;  // a connected component of the pruned dual graph
  int witness = 0;            // vertex with p > 0 or met by a direction component
  std::string witness_kind;   // "p_positive" | "direction" | "" (failure)
};

struct PropertyReport {
  bool prop1_ok = true;                       // every p_i >= -1, and each -1 matches case a/b
  std::vector<MinusOneWitness> minus_ones;
  bool prop2_ok = true;                       // no adjacent pair of -1 vertices
  std::vector<std::pair<int, int>> bad_adjacent;
  bool prop3_ok = true;                       // every pruned component has a witness
  std::vector<Prop3Component> components;
  bool all_ok() const { return prop1_ok && prop2_ok && prop3_ok; }
};

// The case analysis for p_i = -1 needs the strict transforms, hence the Trace.
PropertyReport check_combinatorial_properties(const Trace& tr, const Direction& d,
                                              const DeltaPData& dp);

// Closed form for p_1 on a one-pair curve (p, q) with direction counts
// (delta_1, delta_2); n = ceil(q / (q - p)). Returns nullopt for combinations
// outside the table (p and q both even is rejected as non-coprime).
std::optional<long> p1_table(long p, long q, long delta1, long delta2);

// ---------------------------------------------------------------------------
// numbered dual tree

struct TreeNumber {
  bool infinite = false;
  long value = 0;  // meaningful when !infinite
};

struct NumberedDualTree {
  long N = 0;
  std::vector<TreeNumber> numbers;             // per divisor, 1-based semantics (index 0 = D_1)
  std::vector<std::pair<int, int>> edges;      // dual graph edges
  int curve_attach = 0;                        // divisor met by the strict transform of S
  bool last_dicritical = true;                 // D_N carries the dicritical mark
  std::vector<ComponentFate> direction_attach; // where each d-component landed
};

NumberedDualTree numbered_dual_tree(const ResolutionData& r, const DeltaPData& dp);

// ---------------------------------------------------------------------------
// multiplicity identity

struct FoliationIdentity {
  long lhs = 0;  // sum_{i<N} p_i * (E^{-1})_{1,i} + delta_1 - 1
  long rhs = 0;  // floor((nu(S) + delta_1) / 2)
  bool equal = false;
};

FoliationIdentity foliation_mult_identity(const ResolutionData& r, const DeltaPData& dp);

// ---------------------------------------------------------------------------
// tangent 1-forms

// A 1-form (y^yf * A) dx + (x^xf * B) dy. The axis factors make tangency to
// the corresponding axis automatic; valuation is read off the assembled
// coefficients.
struct OneForm {
  Poly2 A, B;
  bool x_factor = false;  // multiply B by x   (direction contains {x=0})
  bool y_factor = false;  // multiply A by y   (direction contains {y=0})

  Poly2 assembled_A() const;
  Poly2 assembled_B() const;
  std::optional<long> valuation() const;  // min valuation of assembled coefficients
  std::string str() const;                // e.g. "(-7*y) dx + (6*x) dy"
};

// Exact tangency tests. Equation encoding: f divides P*df/dy - Q*df/dx where
// (P, Q) are the assembled coefficients. Parametrization encoding: the
// pullback (P o gamma) * sx' + (Q o gamma) * sy' vanishes (exactly for exact
// inputs, through the known order otherwise).
bool is_tangent(const Poly2& f, const OneForm& w, Poly2* cofactor = nullptr);
bool is_tangent(const Parametrization& par, const OneForm& w);

struct SaitoOptions {
  long degree_bound = 0;    // 0 = route default
  long jet_order = 0;       // 0 = conductor + 2*degree_bound (parametrization route)
  bool check_stability = false;  // re-run with doubled bounds, compare
};

struct SaitoResult {
  long nu_min = 0;
  OneForm certificate;
  std::string route;            // "equation" | "parametrization"
  long degree_bound_used = 0;
  long jet_order_used = 0;      // 0 for the equation route
  bool stability_checked = false;
  bool stable = true;
};

// Equation route: curve {f = 0}, direction restricted to axes. Default degree
// bound: deg(f) + 2.
SaitoResult min_saito_valuation(const Poly2& f, const Direction& d, const SaitoOptions& opt = {});

// Parametrization route: jets of the pullback through the jet order. Default
// degree bound: conductor + 2; default jet order: conductor + 2*degree_bound.
// Non-axis direction components contribute their own pullback-jet rows.
SaitoResult min_saito_valuation(const Parametrization& par, const Direction& d,
                                const SaitoOptions& opt = {});

// ---------------------------------------------------------------------------
// basis criterion

struct CriterionReport {
  bool omega1_tangent = false;
  bool omega2_tangent = false;
  std::optional<long> wedge_valuation;  // valuation of A1*B2 - A2*B1 (assembled)
  long expected_valuation = 0;          // nu(S_d)
  bool valuation_ok = false;
  bool divides = false;                 // wedge = u * F for F = f * (axis factors)
  bool unit = false;                    // u(0,0) != 0
  std::string u_str;                    // the cofactor u when divides
  bool is_basis = false;
};

CriterionReport check_saito_criterion(const OneForm& w1, const OneForm& w2, const Poly2& f,
                                      const Direction& d);

// ---------------------------------------------------------------------------
// generic-minimum verification

struct GenericCheck {
  std::uint64_t seed = 0;
  long expected = 0;  // floor(nu(S_d) / 2)
  long got = 0;
  bool match = false;
  bool stable = true;
};

struct GenericReport {
  std::vector<long> char_exponents;
  std::string direction;
  std::vector<GenericCheck> checks;
  bool all_match = false;
};

// For each seed: instantiate a generic member of the class, run the
// parametrization-route oracle (with stability check), compare against
// floor(nu(S_d)/2). Mismatches are reported, never suppressed.
GenericReport verify_generic_minimum(const CharExponents& c, const Direction& d,
                                     const std::vector<std::uint64_t>& seeds,
                                     SaitoOptions opt = {});

}  // namespace planebranch
