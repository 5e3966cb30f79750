#pragma once

#include <optional>
#include <string>
#include <vector>

#include "charvar/character_variety.hpp"
#include "charvar/cyclo.hpp"

namespace charvar {

/// coeff * cos(angle), with the angle held in first-quadrant form [0, pi/2]
/// after normalization (signs absorbed via cos(pi - t) = -cos(t)).
struct CosineTerm {
  Rational coeff;
  RationalAngle angle;

  friend bool operator==(const CosineTerm&, const CosineTerm&) = default;
};

/// sum of terms = rhs. The combination's value is sum(coeff*cos(angle)) - rhs,
/// preserved exactly by normalization.
struct CosineCombination {
  std::vector<CosineTerm> terms;
  Rational rhs = 0;

  friend bool operator==(const CosineCombination&, const CosineCombination&) = default;
};

/// Fold all angles into [0, pi/2], merge like angles, drop cos(pi/2) and
/// zero-coefficient terms, move constants (angle 0) into rhs.
CosineCombination normalize(const CosineCombination& c);

/// Exact value sum(coeff * cos(angle)) - rhs.
CycloReal exact_value(const CosineCombination& c);

/// The tau_X-equation at rational angles (theta_x, theta_y, theta_z):
/// cos(tx+tz) + cos(tx-tz) - cos(ty) as a normalized combination, together
/// with the exact fourth coordinate xz - y (its half is the combination's
/// value; rational-angle orbits need as_two_cos(image) to succeed).
struct TwistEquation {
  CosineCombination combo;
  CycloReal image;  // xz - y (tau_X) or yz - x (tau_Y)
};

TwistEquation tau_x_equation(const RationalAngle& tx, const RationalAngle& ty,
                             const RationalAngle& tz);
TwistEquation tau_y_equation(const RationalAngle& tx, const RationalAngle& ty,
                             const RationalAngle& tz);

/// If two terms of the tau_X-equation at p cancel one another (all coordinates
/// nonzero, rational angles), k = 2 follows; the returned tag names the
/// cancelling pair. Verifies boundary_trace(p) = 2 exactly before returning.
std::optional<std::string> cancellation_implies_k2(const ExactPoint& p);

struct CjReport {
  struct Line {
    std::string name;
    bool pass;
  };
  std::vector<Line> lines;
  bool all_pass;
};

/// Exact verification of the ten rational-sum identities and the five
/// vanishing-sum identities (the parametric family at several rational t).
CjReport verify_cj_lists();

/// Exhaustive scan over combinations of at most 4 distinct angles p*pi/q in
/// (0, pi/2), q <= max_den, with coefficients from `coeff_set`, returning all
/// minimal vanishing combinations, deduplicated up to proportionality
/// (canonical form: sorted by angle, leading coefficient +1).
std::vector<CosineCombination> search_vanishing(
    int max_den, const std::vector<Rational>& coeff_set = {Rational(1), Rational(-1),
                                                           Rational(1, 2), Rational(-1, 2)});

struct CjMatch {
  int equation;                   // 1..5
  std::optional<RationalAngle> t; // parameter for equation 1
};

struct CjMatchResult {
  std::optional<CjMatch> id;
  bool degenerate = false;  // the zero combination
};

/// Is the (normalized) combination proportional to one of the five vanishing
/// equations? Exact rational angle comparison throughout.
CjMatchResult match_cj(const CosineCombination& c);

}  // namespace charvar
