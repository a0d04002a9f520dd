#include "planebranch/direction.hpp"

#include "planebranch/errors.hpp"

namespace planebranch {

DirComponent DirComponent::axis_x() {
  DirComponent c;
  c.kind = Kind::AxisX;
  c.cx = Series(Series::kExact);
  c.cy = Series::monomial(1, Rat(1));
  c.label = "x=0";
  return c;
}

DirComponent DirComponent::axis_y() {
  DirComponent c;
  c.kind = Kind::AxisY;
  c.cx = Series::monomial(1, Rat(1));
  c.cy = Series(Series::kExact);
  c.label = "y=0";
  return c;
}

DirComponent DirComponent::curve(const Series& cx, const Series& cy,
                                 const std::string& label) {
  DirComponent c;
  c.kind = Kind::Curve;
  c.cx = cx;
  c.cy = cy;
  c.label = label.empty() ? "component" : label;
  return c;
}

Direction Direction::axis_x() { return make_direction({DirComponent::axis_x()}); }
Direction Direction::axis_y() { return make_direction({DirComponent::axis_y()}); }
Direction Direction::axes_xy() {
  return make_direction({DirComponent::axis_x(), DirComponent::axis_y()});
}

bool Direction::has_axis_x() const {
  for (const auto& c : components)
    if (c.kind == DirComponent::Kind::AxisX) return true;
  return false;
}

bool Direction::has_axis_y() const {
  for (const auto& c : components)
    if (c.kind == DirComponent::Kind::AxisY) return true;
  return false;
}

bool Direction::axes_only() const {
  for (const auto& c : components)
    if (c.kind == DirComponent::Kind::Curve) return false;
  return true;
}

std::string Direction::describe() const {
  if (components.empty()) return "none";
  if (axes_only()) {
    std::string s;
    if (has_axis_x()) s += "x";
    if (has_axis_y()) s += "y";
    return s;
  }
  std::string s;
  for (const auto& c : components) {
    if (!s.empty()) s += ",";
    s += c.label;
  }
  return s;
}

namespace {

// Projective tangent direction [dx : dy] of a smooth germ at the origin.
std::pair<Rat, Rat> tangent_dir(const DirComponent& c) {
  auto ox = c.cx.order();
  auto oy = c.cy.order();
  long m = std::min(ox.value_or(c.cx.truncation()), oy.value_or(c.cy.truncation()));
  if (m != 1)
    throw MathError("direction component '" + c.label + "' is not a smooth germ "
                    "(order " + std::to_string(m) + " at the origin)");
  Rat dx = (ox && *ox == 1) ? c.cx.coeff(1) : Rat(0);
  Rat dy = (oy && *oy == 1) ? c.cy.coeff(1) : Rat(0);
  return {dx, dy};
}

}  // namespace

Direction make_direction(const std::vector<DirComponent>& comps) {
  if (comps.size() > 2)
    throw MathError("a direction has at most two components");
  for (const auto& c : comps) {
    if (!c.cx.is_exact_zero() && c.cx.order() && *c.cx.order() == 0)
      throw MathError("direction component '" + c.label + "' does not pass through the origin");
    if (!c.cy.is_exact_zero() && c.cy.order() && *c.cy.order() == 0)
      throw MathError("direction component '" + c.label + "' does not pass through the origin");
    if (c.cx.is_exact_zero() && c.cy.is_exact_zero())
      throw MathError("direction component '" + c.label + "' is degenerate");
    tangent_dir(c);  // validates smoothness
  }
  if (comps.size() == 2) {
    auto [a1, b1] = tangent_dir(comps[0]);
    auto [a2, b2] = tangent_dir(comps[1]);
    if (is_zero(a1 * b2 - a2 * b1))
      throw MathError("direction components are tangent to each other; "
                      "they must be transverse");
  }
  Direction d;
  d.components = comps;
  return d;
}

}  // namespace planebranch
