#include <doctest.h>

#include "charvar/diophantine.hpp"

using namespace charvar;

TEST_CASE("normalization folds into the first quadrant") {
  // cos(5pi/6) = -cos(pi/6); cos(3pi/2) = 0; cos(0) = 1 moves to the rhs.
  CosineCombination c;
  c.terms = {{Rational(1), RationalAngle(5, 6)},
             {Rational(2), RationalAngle(3, 2)},
             {Rational(3), RationalAngle(0, 1)}};
  c.rhs = Rational(1);
  const CosineCombination n = normalize(c);
  REQUIRE(n.terms.size() == 1);
  CHECK(n.terms[0].coeff == Rational(-1));
  CHECK(n.terms[0].angle == RationalAngle(1, 6));
  CHECK(n.rhs == Rational(-2));
  CHECK(exact_value(c) == exact_value(n));
}

TEST_CASE("normalization merges like angles") {
  CosineCombination c;
  c.terms = {{Rational(1), RationalAngle(1, 5)},
             {Rational(1, 2), RationalAngle(1, 5)},
             {Rational(-3, 2), RationalAngle(9, 5)}};  // cos(9pi/5) = cos(pi/5)
  const CosineCombination n = normalize(c);
  CHECK(n.terms.empty());
  CHECK(n.rhs == 0);
  CHECK(exact_value(c).is_zero());
}

TEST_CASE("exact_value of a known identity") {
  // cos(pi/5) - cos(2pi/5) = 1/2
  CosineCombination c;
  c.terms = {{Rational(1), RationalAngle(1, 5)}, {Rational(-1), RationalAngle(2, 5)}};
  c.rhs = Rational(1, 2);
  CHECK(exact_value(c).is_zero());
  c.rhs = Rational(1, 3);
  CHECK_FALSE(exact_value(c).is_zero());
}

TEST_CASE("twist equations encode the image coordinate") {
  const RationalAngle tx(1, 5), ty(1, 3), tz(1, 4);
  const TwistEquation eq = tau_x_equation(tx, ty, tz);
  // cos(tx+tz) + cos(tx-tz) - cos(ty) = (x z - y) / 2
  CHECK(exact_value(eq.combo).scaled(Rational(2)) == eq.image);
  const CycloReal x = CycloReal::two_cos(tx), y = CycloReal::two_cos(ty),
                  z = CycloReal::two_cos(tz);
  CHECK(eq.image == x * z - y);
  const TwistEquation eqy = tau_y_equation(tx, ty, tz);
  CHECK(eqy.image == y * z - x);
}

TEST_CASE("cancellation forces k = 2") {
  // theta_y = theta_x + theta_z: the cos(tx+tz) and -cos(ty) terms cancel.
  const RationalAngle tx(1, 7), tz(2, 9);
  const RationalAngle ty = tx + tz;
  const ExactPoint p{CycloReal::two_cos(tx), CycloReal::two_cos(ty), CycloReal::two_cos(tz)};
  const auto tag = cancellation_implies_k2(p);
  REQUIRE(tag.has_value());
  CHECK(boundary_trace(p) == CycloReal(2));
}

TEST_CASE("no cancellation on a generic point") {
  const ExactPoint p{CycloReal(1), CycloReal(1), CycloReal(1)};
  CHECK_FALSE(cancellation_implies_k2(p).has_value());
}

TEST_CASE("the published identity lists verify") {
  const CjReport report = verify_cj_lists();
  CHECK(report.all_pass);
  CHECK(report.lines.size() >= 15);
  for (const auto& line : report.lines) CHECK(line.pass);
}

TEST_CASE("vanishing search at small denominator") {
  const auto found = search_vanishing(7);
  // cos(pi/5) - cos(pi/3) - cos(2pi/5) = 0 and the 1/7 family line must appear.
  bool saw_eq2 = false, saw_eq3 = false;
  for (const auto& c : found) {
    const CjMatchResult m = match_cj(c);
    REQUIRE(m.id.has_value());
    if (m.id->equation == 2) saw_eq2 = true;
    if (m.id->equation == 3) saw_eq3 = true;
  }
  CHECK(saw_eq2);
  CHECK(saw_eq3);
  for (const auto& c : found) CHECK(exact_value(c).is_zero());
}

TEST_CASE("match_cj recognizes the parametric family with its parameter") {
  // cos(t + pi/3) + cos(pi/3 - t) - cos(t) = 0 at t = pi/12
  CosineCombination c;
  c.terms = {{Rational(1), RationalAngle(1, 12) + RationalAngle(1, 3)},
             {Rational(1), RationalAngle(1, 3) - RationalAngle(1, 12)},
             {Rational(-1), RationalAngle(1, 12)}};
  const CjMatchResult m = match_cj(normalize(c));
  REQUIRE(m.id.has_value());
  CHECK(m.id->equation == 1);
  REQUIRE(m.id->t.has_value());
  CHECK(*m.id->t == RationalAngle(1, 12));
}

TEST_CASE("match_cj flags the degenerate combination and rejects non-identities") {
  CHECK(match_cj(CosineCombination{}).degenerate);
  CosineCombination c;
  c.terms = {{Rational(1), RationalAngle(1, 5)}};
  const CjMatchResult m = match_cj(normalize(c));
  CHECK_FALSE(m.id.has_value());
  CHECK_FALSE(m.degenerate);
}

TEST_CASE("match_cj is scale invariant") {
  CosineCombination c;
  c.terms = {{Rational(-2), RationalAngle(1, 5)},
             {Rational(2), RationalAngle(1, 3)},
             {Rational(2), RationalAngle(2, 5)}};
  const CjMatchResult m = match_cj(normalize(c));
  REQUIRE(m.id.has_value());
  CHECK(m.id->equation == 2);
}
