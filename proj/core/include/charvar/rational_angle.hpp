#pragma once

#include <cmath>
#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace charvar {

/// An angle (num/den)*pi, stored reduced with den >= 1 and num normalized
/// into [0, 2*den), i.e. the angle lives in [0, 2*pi).
struct RationalAngle {
  std::int64_t num = 0;
  std::int64_t den = 1;

  RationalAngle() = default;

  RationalAngle(std::int64_t p, std::int64_t q) {
    if (q == 0) throw std::invalid_argument("RationalAngle: zero denominator");
    if (q < 0) {
      p = -p;
      q = -q;
    }
    const std::int64_t g = std::gcd(p < 0 ? -p : p, q);
    if (g > 1) {
      p /= g;
      q /= g;
    }
    p %= 2 * q;
    if (p < 0) p += 2 * q;
    num = p;
    den = q;
  }

  friend bool operator==(const RationalAngle&, const RationalAngle&) = default;

  // Order by angle value.
  friend std::strong_ordering operator<=>(const RationalAngle& a, const RationalAngle& b) {
    return a.num * b.den <=> b.num * a.den;
  }

  friend RationalAngle operator+(const RationalAngle& a, const RationalAngle& b) {
    return RationalAngle(a.num * b.den + b.num * a.den, a.den * b.den);
  }
  friend RationalAngle operator-(const RationalAngle& a, const RationalAngle& b) {
    return RationalAngle(a.num * b.den - b.num * a.den, a.den * b.den);
  }
  RationalAngle operator-() const { return RationalAngle(-num, den); }

  /// Reflect into [0, pi]; cos is unchanged.
  RationalAngle folded_to_pi() const {
    if (num > den) return RationalAngle(2 * den - num, den);
    return *this;
  }

  bool is_zero() const { return num == 0; }

  double radians() const { return M_PI * static_cast<double>(num) / static_cast<double>(den); }

  std::string str() const { return std::to_string(num) + "/" + std::to_string(den) + " pi"; }
};

}  // namespace charvar
