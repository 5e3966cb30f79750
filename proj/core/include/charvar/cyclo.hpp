#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "charvar/rational_angle.hpp"

namespace charvar {

using Rational = mpq_class;
using Integer = mpz_class;

/// Thrown when an operation would leave the configured conductor cap.
struct ConductorOverflow : std::runtime_error {
  explicit ConductorOverflow(const std::string& what) : std::runtime_error(what) {}
};

/// The n-th cyclotomic polynomial Phi_n, ascending coefficient order,
/// computed by recursive division of x^n - 1 by Phi_d over proper divisors d.
/// Results are memoized behind a lock.
const std::vector<Integer>& cyclotomic_polynomial(std::int64_t n);

std::int64_t euler_phi(std::int64_t n);

/// An exact real element of a cyclotomic field Q(zeta_N): coefficients over
/// the power basis zeta^0 .. zeta^{phi(N)-1}, reduced mod Phi_N.
///
/// Conductors are kept out of the residue class 2 mod 4 (Q(zeta_2m) = Q(zeta_m)
/// for odd m), so a value has one canonical coefficient vector per conductor.
/// Rational values are demoted to conductor 1, arithmetic otherwise keeps the
/// operands' lcm conductor; equality embeds both sides into a common field.
/// Values are immutable after construction.
class CycloReal {
 public:
  CycloReal() : conductor_(1), coeffs_(1, Rational(0)) {}
  CycloReal(const Rational& v) : conductor_(1), coeffs_(1, v) {
    coeffs_[0].canonicalize();
  }
  CycloReal(long v) : CycloReal(Rational(v)) {}
  CycloReal(int v) : CycloReal(Rational(v)) {}

  /// The exact value 2cos(a) = zeta_{2q}^p + zeta_{2q}^{-p} for a = (p/q)pi.
  static CycloReal two_cos(const RationalAngle& a);

  /// Sum of c * zeta_n^e terms; exponents arbitrary, conductor normalized.
  static CycloReal from_zeta_powers(std::int64_t n,
                                    const std::vector<std::pair<std::int64_t, Rational>>& terms);

  std::int64_t conductor() const { return conductor_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  /// Same number in Q(zeta_M); requires conductor | M (after normalizing M).
  CycloReal embedded(std::int64_t new_conductor) const;

  /// Image under zeta -> zeta^k for gcd(k, N) = 1 (a Galois conjugate).
  CycloReal galois_image(std::int64_t k) const;

  friend CycloReal operator+(const CycloReal& a, const CycloReal& b);
  friend CycloReal operator-(const CycloReal& a, const CycloReal& b);
  friend CycloReal operator*(const CycloReal& a, const CycloReal& b);
  CycloReal operator-() const;
  CycloReal scaled(const Rational& r) const;

  CycloReal& operator+=(const CycloReal& b) { return *this = *this + b; }
  CycloReal& operator-=(const CycloReal& b) { return *this = *this - b; }
  CycloReal& operator*=(const CycloReal& b) { return *this = *this * b; }

  bool operator==(const CycloReal& b) const;

  bool is_zero() const;
  bool is_rational() const { return conductor_ == 1; }
  const Rational& rational_value() const;

  double to_float() const;

  /// The unique a in [0, pi] with value = 2cos(a) and a rational in pi, if it
  /// exists in this field (scan of zeta^k + zeta^{-k} over a conductor that
  /// also covers the rational cosines); empty otherwise.
  std::optional<RationalAngle> as_two_cos() const;

  /// Exact sign test helper: true iff equal to own conjugate zeta -> zeta^{-1}.
  bool equals_conjugate() const;

  /// Canonical serialization, stable per conductor; embed first when keys from
  /// different fields must agree.
  std::string key() const;

  static void set_conductor_cap(std::int64_t cap);
  static std::int64_t conductor_cap();

 private:
  std::int64_t conductor_;
  std::vector<Rational> coeffs_;  // length phi(conductor_)

  CycloReal(std::int64_t n, std::vector<Rational> coeffs)
      : conductor_(n), coeffs_(std::move(coeffs)) {}
  void demote_if_rational();
};

/// Total order: exact equality first, float comparison otherwise.
int compare(const CycloReal& a, const CycloReal& b);

}  // namespace charvar
