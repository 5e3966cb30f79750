#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <vector>

#include "charvar/cyclo.hpp"

namespace charvar {

/// Global trace coordinates (tr X, tr Y, tr XY) of a representation class.
/// Generic over the scalar: CycloReal for exact work, double for simulation.
template <typename S>
struct TracePoint {
  S x, y, z;

  friend bool operator==(const TracePoint&, const TracePoint&) = default;
};

using ExactPoint = TracePoint<CycloReal>;
using FloatPoint = TracePoint<double>;

/// Boundary trace k = x^2 + y^2 + z^2 - xyz - 2.
template <typename S>
S boundary_trace(const TracePoint<S>& p) {
  return p.x * p.x + p.y * p.y + p.z * p.z - p.x * p.y * p.z - S(2);
}

template <typename S>
TracePoint<S> tau_x(const TracePoint<S>& p) {
  return {p.x, p.z, p.x * p.z - p.y};
}

template <typename S>
TracePoint<S> tau_y(const TracePoint<S>& p) {
  return {p.z, p.y, p.y * p.z - p.x};
}

// Inverses solved from the forward formulas.
template <typename S>
TracePoint<S> tau_x_inv(const TracePoint<S>& p) {
  return {p.x, p.x * p.y - p.z, p.y};
}

template <typename S>
TracePoint<S> tau_y_inv(const TracePoint<S>& p) {
  return {p.x * p.y - p.z, p.y, p.x};
}

enum class Twist { X, XInv, Y, YInv };

using MCGWord = std::vector<Twist>;

template <typename S>
TracePoint<S> apply_twist(Twist t, const TracePoint<S>& p) {
  switch (t) {
    case Twist::X: return tau_x(p);
    case Twist::XInv: return tau_x_inv(p);
    case Twist::Y: return tau_y(p);
    case Twist::YInv: return tau_y_inv(p);
  }
  throw std::logic_error("apply_twist: bad generator");
}

template <typename S>
TracePoint<S> apply_word(const MCGWord& w, TracePoint<S> p) {
  for (Twist t : w) p = apply_twist(t, p);
  return p;
}

/// Level set of tau_X at fixed x and k:
///   (2+x)/4 (y+z)^2 + (2-x)/4 (y-z)^2 = 2 + k - x^2.
struct EllipseParams {
  double x;
  double k;
  double coef_sum;    // (2+x)/4, multiplies (y+z)^2
  double coef_diff;   // (2-x)/4, multiplies (y-z)^2
  double rhs;         // 2 + k - x^2
  bool empty;         // rhs < 0
  bool degenerate;    // x = +-2
};

EllipseParams ellipse_params(double x, double k);

/// Linear change of coordinates in (y,z) at fixed x that turns E_{x,k} into
/// the circle y~^2 + z~^2 = 2 + k - x^2. Requires |x| < 2.
FloatPoint to_tilde(const FloatPoint& p);
FloatPoint from_tilde(const FloatPoint& p);

/// tau_X rotates the transformed level set by acos(x/2).
double rotation_angle(double x);
std::optional<RationalAngle> rational_rotation(const CycloReal& x);

/// The 6 coordinate permutations, optionally composed with the even sign
/// changes {id, (-,+,-), (+,-,-), (-,-,+)} (valid when -I is in the group).
template <typename S>
std::vector<TracePoint<S>> s_equivalence_orbit(const TracePoint<S>& p,
                                               bool minus_identity_in_group) {
  std::vector<TracePoint<S>> out;
  const std::array<TracePoint<S>, 6> perms = {{
      {p.x, p.y, p.z}, {p.x, p.z, p.y}, {p.y, p.x, p.z},
      {p.y, p.z, p.x}, {p.z, p.x, p.y}, {p.z, p.y, p.x},
  }};
  for (const auto& q : perms) {
    std::vector<TracePoint<S>> signed_forms = {q};
    if (minus_identity_in_group) {
      signed_forms.push_back({-q.x, q.y, -q.z});
      signed_forms.push_back({q.x, -q.y, -q.z});
      signed_forms.push_back({-q.x, -q.y, q.z});
    }
    for (const auto& f : signed_forms) {
      if (std::find(out.begin(), out.end(), f) == out.end()) out.push_back(f);
    }
  }
  return out;
}

inline int scalar_compare(double a, double b) { return a < b ? -1 : (a > b ? 1 : 0); }
inline int scalar_compare(const CycloReal& a, const CycloReal& b) { return compare(a, b); }

/// Lexicographically greatest member of the S-orbit; deterministic Table 1 key.
template <typename S>
TracePoint<S> s_canonical(const TracePoint<S>& p, bool minus_identity_in_group) {
  auto orbit = s_equivalence_orbit(p, minus_identity_in_group);
  auto lex_less = [](const TracePoint<S>& a, const TracePoint<S>& b) {
    if (int c = scalar_compare(a.x, b.x)) return c < 0;
    if (int c = scalar_compare(a.y, b.y)) return c < 0;
    return scalar_compare(a.z, b.z) < 0;
  };
  return *std::max_element(orbit.begin(), orbit.end(), lex_less);
}

enum class PinClass { Spin2, Pin2, Neither };

/// Spin2 iff k = 2; Pin2 iff k != 2 and at least two coordinates vanish.
PinClass classify_pin(const ExactPoint& p);
PinClass classify_pin(const FloatPoint& p);  // tolerance 1e-9 on zero and on k = 2

/// The six Pin(2) points of E_k for -2 < k < 2:
/// (+-sqrt(2+k),0,0) and coordinate permutations.
std::vector<FloatPoint> pin_points(double k);

}  // namespace charvar
