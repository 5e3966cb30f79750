#include "charvar/character_variety.hpp"

namespace charvar {

EllipseParams ellipse_params(double x, double k) {
  if (std::abs(x) > 2.0) throw std::domain_error("ellipse_params: |x| > 2");
  EllipseParams e;
  e.x = x;
  e.k = k;
  e.coef_sum = (2.0 + x) / 4.0;
  e.coef_diff = (2.0 - x) / 4.0;
  e.rhs = 2.0 + k - x * x;
  e.empty = e.rhs < 0.0;
  e.degenerate = std::abs(x) == 2.0;
  return e;
}

namespace {

struct TildeCoefs {
  double diag;  // (sqrt(2-x) + sqrt(2+x)) / (2 sqrt 2)
  double off;   // (sqrt(2-x) - sqrt(2+x)) / (2 sqrt 2)
};

TildeCoefs tilde_coefs(double x) {
  if (std::abs(x) >= 2.0) throw std::domain_error("tilde change degenerate at |x| = 2");
  const double sm = std::sqrt(2.0 - x);
  const double sp = std::sqrt(2.0 + x);
  const double inv = 1.0 / (2.0 * std::sqrt(2.0));
  return {(sm + sp) * inv, (sm - sp) * inv};
}

}  // namespace

FloatPoint to_tilde(const FloatPoint& p) {
  const auto [a, b] = tilde_coefs(p.x);
  return {p.x, a * p.y + b * p.z, b * p.y + a * p.z};
}

FloatPoint from_tilde(const FloatPoint& p) {
  const auto [a, b] = tilde_coefs(p.x);
  const double det = a * a - b * b;  // sqrt(4 - x^2) / 2, nonzero for |x| < 2
  return {p.x, (a * p.y - b * p.z) / det, (-b * p.y + a * p.z) / det};
}

double rotation_angle(double x) {
  if (std::abs(x) > 2.0) throw std::domain_error("rotation_angle: |x| > 2");
  return std::acos(x / 2.0);
}

std::optional<RationalAngle> rational_rotation(const CycloReal& x) { return x.as_two_cos(); }

PinClass classify_pin(const ExactPoint& p) {
  const CycloReal k = boundary_trace(p);
  if (k == CycloReal(2)) return PinClass::Spin2;
  const int zeros = int(p.x.is_zero()) + int(p.y.is_zero()) + int(p.z.is_zero());
  return zeros >= 2 ? PinClass::Pin2 : PinClass::Neither;
}

PinClass classify_pin(const FloatPoint& p) {
  constexpr double tol = 1e-9;
  const double k = boundary_trace(p);
  if (std::abs(k - 2.0) <= tol) return PinClass::Spin2;
  const int zeros =
      int(std::abs(p.x) <= tol) + int(std::abs(p.y) <= tol) + int(std::abs(p.z) <= tol);
  return zeros >= 2 ? PinClass::Pin2 : PinClass::Neither;
}

std::vector<FloatPoint> pin_points(double k) {
  if (!(k > -2.0 && k < 2.0)) throw std::domain_error("pin_points: k outside (-2, 2)");
  const double a = std::sqrt(2.0 + k);
  return {{a, 0, 0}, {-a, 0, 0}, {0, a, 0}, {0, -a, 0}, {0, 0, a}, {0, 0, -a}};
}

}  // namespace charvar
