#pragma once

// Exact blow-up engine for irreducible plane branches.
//
// The minimal desingularization is traced on the parametrization: each step
// divides the local pair (sx, sy) in the chart determined by the orders,
// translates the new coordinate by its constant term, and tracks which of the
// two local divisor branches ({x=0}, {y=0}) still pass through the center.
// The record is enough to rebuild the proximity matrix, its inverse, the
// intersection matrix and the dual graph, and to replay auxiliary curves
// through the same chart/translation sequence.

#include <string>
#include <vector>

#include "planebranch/curve.hpp"
#include "planebranch/matrix.hpp"

namespace planebranch {

struct BlowupStep {
  int index = 0;                      // 1-based
  char chart = 'x';                   // 'x': (sx, sy/sx - c); 'y': (sx/sy - c, sy)
  std::vector<int> center_divisors;   // divisors through the center (size 0..2)
  long strict_mult = 0;               // multiplicity of the strict transform at the center
  long reduced_total_mult = 0;        // strict_mult + |center_divisors|
  Rat translation;                    // the constant c subtracted after division
};

struct ResolutionData {
  std::vector<BlowupStep> steps;      // length N; empty for a smooth curve
  IntMat proximity;                   // upper unitriangular, entries in {0,-1} off-diagonal
  IntMat proximity_inverse;           // exact inverse, nonnegative
  IntMat intersection;                // from direct bookkeeping
  std::string intersection_convention;// which matrix product reproduced it (e.g. "-E*Et")
  std::vector<std::pair<int, int>> dual_edges;  // 1-based divisor indices, i < j
  std::vector<long> self_intersections;          // D_i . D_i
  std::vector<int> n_row;             // n_i = 1 + #(-1 entries on row i of proximity)
  int final_attach = 0;               // divisor met transversally by the strict transform (= N)

  long N() const { return static_cast<long>(steps.size()); }
  bool adjacent(int i, int j) const;  // 1-based
};

// Trace the minimal resolution. Stops when the strict transform is smooth,
// transverse to the divisor branches through its point, and based at a free
// (non-corner) point. Smooth input gives N = 0.
ResolutionData resolve(const Parametrization& par);

// Local branch state at each center, exposed for the modules that need to
// look at strict transforms (second characteristic exponent of S_i) or replay
// auxiliary curves: state[i] is the pair before blow-up i+1 (0-based), with
// bx/by the divisor indices of the local {x=0}/{y=0} branches (0 = none).
struct LocalState {
  Series sx, sy;
  int bx = 0, by = 0;
};

struct Trace {
  ResolutionData data;
  std::vector<LocalState> states;  // length N (entry state of each step)
};

Trace resolve_trace(const Parametrization& par);

}  // namespace planebranch
