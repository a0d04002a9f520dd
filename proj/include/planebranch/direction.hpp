#pragma once

// A direction is an empty set, one smooth germ, or two transverse smooth
// germs adjoined to the curve. Axis components get special (exact) handling
// throughout; arbitrary smooth components are carried as parametrizations.

#include <string>
#include <vector>

#include "planebranch/series.hpp"

namespace planebranch {

struct DirComponent {
  enum class Kind { AxisX, AxisY, Curve };
  Kind kind = Kind::Curve;
  Series cx, cy;  // parametrization s -> (cx(s), cy(s)); axes use (0, s) / (s, 0)
  std::string label;

  static DirComponent axis_x();  // the germ {x = 0}
  static DirComponent axis_y();  // the germ {y = 0}
  static DirComponent curve(const Series& cx, const Series& cy, const std::string& label);
};

struct Direction {
  std::vector<DirComponent> components;  // size 0..2

  static Direction none() { return {}; }
  static Direction axis_x();
  static Direction axis_y();
  static Direction axes_xy();

  int count() const { return static_cast<int>(components.size()); }
  bool has_axis_x() const;
  bool has_axis_y() const;
  bool axes_only() const;
  std::string describe() const;  // "none", "x", "xy", or component labels
};

// Validates: each component smooth (order-1 germ), and when there are two,
// transverse at the origin. Throws MathError otherwise.
Direction make_direction(const std::vector<DirComponent>& comps);

}  // namespace planebranch
