#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "charvar/character_variety.hpp"

using namespace charvar;

namespace {

FloatPoint random_surface_point(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> uk(-1.99, 1.99);
  std::uniform_real_distribution<double> ua(0.0, 2.0 * std::numbers::pi);
  const double k = uk(rng);
  const double x_max = std::sqrt(2.0 + k);
  std::uniform_real_distribution<double> ux(-0.99 * x_max, 0.99 * x_max);
  const double x = ux(rng);
  const double r = std::sqrt(2.0 + k - x * x);
  const double a = ua(rng);
  return from_tilde({x, r * std::cos(a), r * std::sin(a)});
}

}  // namespace

TEST_CASE("boundary trace of reference points") {
  CHECK(boundary_trace(FloatPoint{1, 1, 1}) == doctest::Approx(0.0));
  CHECK(boundary_trace(FloatPoint{0, 0, 0}) == doctest::Approx(-2.0));
  CHECK(boundary_trace(FloatPoint{2, 2, 2}) == doctest::Approx(2.0));
  const CycloReal r2 = CycloReal::two_cos(RationalAngle(1, 4));
  CHECK(boundary_trace(ExactPoint{r2, CycloReal(1), r2}) == CycloReal(1));
}

TEST_CASE("twists preserve the boundary trace exactly") {
  const CycloReal phi = CycloReal::two_cos(RationalAngle(1, 5));
  const ExactPoint p{phi, CycloReal(1), phi};
  const CycloReal k = boundary_trace(p);
  CHECK(boundary_trace(tau_x(p)) == k);
  CHECK(boundary_trace(tau_y(p)) == k);
  CHECK(boundary_trace(tau_x_inv(p)) == k);
  CHECK(boundary_trace(tau_y_inv(p)) == k);
}

TEST_CASE("twist inverses round-trip") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    const FloatPoint p = random_surface_point(rng);
    for (auto [fwd, bwd] : {std::pair{Twist::X, Twist::XInv}, std::pair{Twist::Y, Twist::YInv}}) {
      const FloatPoint q = apply_twist(bwd, apply_twist(fwd, p));
      CHECK(q.x == doctest::Approx(p.x).epsilon(1e-12));
      CHECK(q.y == doctest::Approx(p.y).epsilon(1e-12));
      CHECK(q.z == doctest::Approx(p.z).epsilon(1e-12));
    }
  }
}

TEST_CASE("apply_word composes left to right") {
  const FloatPoint p{0.3, -0.4, 0.5};
  const MCGWord w{Twist::X, Twist::Y, Twist::XInv};
  const FloatPoint lhs = apply_word(w, p);
  const FloatPoint rhs = tau_x_inv(tau_y(tau_x(p)));
  CHECK(lhs.x == doctest::Approx(rhs.x));
  CHECK(lhs.y == doctest::Approx(rhs.y));
  CHECK(lhs.z == doctest::Approx(rhs.z));
}

TEST_CASE("ellipse parameters") {
  const EllipseParams e = ellipse_params(1.0, 1.0);
  CHECK(e.coef_sum == doctest::Approx(0.75));
  CHECK(e.coef_diff == doctest::Approx(0.25));
  CHECK(e.rhs == doctest::Approx(2.0));
  CHECK_FALSE(e.empty);
  CHECK_FALSE(e.degenerate);
  CHECK(ellipse_params(0.0, -1.9).rhs == doctest::Approx(0.1));
  CHECK(ellipse_params(1.5, -1.0).empty);
  CHECK(ellipse_params(2.0, 1.0).degenerate);
}

TEST_CASE("tilde change of coordinates is the stated circle") {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 200; ++i) {
    const FloatPoint p = random_surface_point(rng);
    const double k = boundary_trace(p);
    const FloatPoint t = to_tilde(p);
    CHECK(t.y * t.y + t.z * t.z == doctest::Approx(2.0 + k - p.x * p.x).epsilon(1e-9));
    const FloatPoint back = from_tilde(t);
    CHECK(back.y == doctest::Approx(p.y).epsilon(1e-10));
    CHECK(back.z == doctest::Approx(p.z).epsilon(1e-10));
  }
}

TEST_CASE("tau_x acts as rotation by acos(x/2) in tilde coordinates") {
  std::mt19937_64 rng(37);
  for (int i = 0; i < 200; ++i) {
    const FloatPoint p = random_surface_point(rng);
    const double theta = -rotation_angle(p.x);  // clockwise in the (y~, z~) frame
    const FloatPoint t = to_tilde(p);
    const FloatPoint rotated = {t.x, std::cos(theta) * t.y - std::sin(theta) * t.z,
                                std::sin(theta) * t.y + std::cos(theta) * t.z};
    const FloatPoint expect = from_tilde(rotated);
    const FloatPoint got = tau_x(p);
    CHECK(got.y == doctest::Approx(expect.y).epsilon(1e-9));
    CHECK(got.z == doctest::Approx(expect.z).epsilon(1e-9));
  }
}

TEST_CASE("rational rotations") {
  CHECK(rational_rotation(CycloReal(1)) == RationalAngle(1, 3));
  CHECK(rational_rotation(CycloReal(0)) == RationalAngle(1, 2));
  CHECK(rational_rotation(CycloReal(-1)) == RationalAngle(2, 3));
  CHECK(rational_rotation(CycloReal::two_cos(RationalAngle(1, 5))) == RationalAngle(1, 5));
  CHECK_FALSE(rational_rotation(CycloReal(Rational(1, 2))).has_value());
}

TEST_CASE("s-equivalence orbit sizes") {
  const FloatPoint generic{0.3, 0.5, 0.7};
  CHECK(s_equivalence_orbit(generic, false).size() == 6);
  CHECK(s_equivalence_orbit(generic, true).size() == 24);
  const FloatPoint diagonal{1, 1, 1};
  CHECK(s_equivalence_orbit(diagonal, false).size() == 1);
  CHECK(s_equivalence_orbit(diagonal, true).size() == 4);
}

TEST_CASE("s_canonical is an orbit invariant") {
  const ExactPoint p{CycloReal(1), CycloReal::two_cos(RationalAngle(2, 5)), CycloReal(-1)};
  const ExactPoint c = s_canonical(p, true);
  for (const ExactPoint& q : s_equivalence_orbit(p, true)) CHECK(s_canonical(q, true) == c);
  CHECK(s_canonical(c, true) == c);
}

TEST_CASE("pin classification") {
  CHECK(classify_pin(ExactPoint{CycloReal(2), CycloReal(2), CycloReal(2)}) == PinClass::Spin2);
  CHECK(classify_pin(ExactPoint{CycloReal(0), CycloReal(0), CycloReal(1)}) == PinClass::Pin2);
  CHECK(classify_pin(ExactPoint{CycloReal(0), CycloReal(0), CycloReal(0)}) == PinClass::Pin2);
  CHECK(classify_pin(ExactPoint{CycloReal(1), CycloReal(1), CycloReal(1)}) == PinClass::Neither);
  // two zeros but k = 2: the Spin2 case wins
  CHECK(classify_pin(ExactPoint{CycloReal(0), CycloReal(0), CycloReal(2)}) == PinClass::Spin2);
  CHECK(classify_pin(FloatPoint{0.0, 1e-12, 1.2}) == PinClass::Pin2);
  CHECK(classify_pin(FloatPoint{0.1, 0.0, 1.2}) == PinClass::Neither);
}

TEST_CASE("the six pin points") {
  for (double k : {-1.0, 0.0, 1.0, 1.5}) {
    const auto pts = pin_points(k);
    CHECK(pts.size() == 6);
    for (const FloatPoint& p : pts) {
      CHECK(boundary_trace(p) == doctest::Approx(k).epsilon(1e-12));
      CHECK(classify_pin(p) == PinClass::Pin2);
    }
  }
  CHECK_THROWS_AS(pin_points(2.5), std::domain_error);
}
