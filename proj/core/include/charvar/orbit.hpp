#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "charvar/character_variety.hpp"
#include "charvar/cyclo.hpp"

namespace charvar {

/// Orbit cap hit without a witness: neither closure nor infinitude shown.
struct InconclusiveOrbit : std::runtime_error {
  explicit InconclusiveOrbit(const std::string& what) : std::runtime_error(what) {}
};

/// Result of exact breadth-first orbit closure under the four twist generators.
struct OrbitReport {
  bool closed = false;
  std::vector<ExactPoint> points;        // visited points, start point first
  std::optional<ExactPoint> witness;     // point with a coordinate that is not
                                         // a rational cosine (orbit infinite)
  bool inconclusive = false;             // cap hit without witness
};

/// Closure of p under {tau_X^±1, tau_Y^±1} with canonical-form hashing in the
/// starting field. Stops early with a witness once any visited point has a
/// coordinate whose angle is irrational (the orbit is then infinite, and dense
/// for -2 < k < 2).
OrbitReport exact_orbit(const ExactPoint& p, std::size_t cap = 1'000'000);

enum class Verdict { Spin2Fiber, Pin2Point, FiniteOrbit, Dense, DenseCandidate };

std::string verdict_name(Verdict v);

struct Classification {
  Verdict verdict;
  double k = 0.0;
  std::optional<CycloReal> k_exact;
  std::optional<std::size_t> orbit_size;       // FiniteOrbit
  std::optional<ExactPoint> table1_class;      // matched canonical class
  std::optional<ExactPoint> witness;           // irrational-angle witness
  std::vector<std::string> notes;
};

/// Decision tree: k = 2 (Spin(2) fiber) / Pin(2) point / irrational-angle
/// coordinate (dense) / exact orbit closure (finite, matched against the
/// published classes; or dense via an orbit witness).
Classification classify(const ExactPoint& p, std::size_t cap = 1'000'000);

/// Float entry point: coordinates are snapped to 2cos(p*pi/q), q <= max_den,
/// within `tol`; un-snappable coordinates yield the DenseCandidate heuristic
/// verdict, never upgraded to Dense.
Classification classify(const FloatPoint& p, int max_den = 420, double tol = 1e-9,
                        std::size_t cap = 1'000'000);

std::optional<RationalAngle> snap_to_cos_angle(double value, int max_den = 420,
                                               double tol = 1e-9);

struct WordPolicy {
  enum class Kind { UniformRandom, Alternate };
  Kind kind = Kind::UniformRandom;
  int x_period = 1;  // Alternate: tau_X^a then tau_Y^b, repeated
  int y_period = 1;
};

struct FloatOrbitResult {
  std::vector<FloatPoint> points;  // includes the start point
  bool aborted = false;            // k drifted beyond the abort threshold
  double max_drift = 0.0;
};

/// Seeded generator iteration; k-drift beyond 1e-6 aborts the stream.
FloatOrbitResult float_orbit(const FloatPoint& p, std::size_t steps, const WordPolicy& policy,
                             std::uint64_t seed);

/// n points covering the sphere E_k, built per x-level on the tilde circles,
/// with per-level counts proportional to the circle radius.
std::vector<FloatPoint> sphere_grid(double k, std::size_t n);

struct DensityResult {
  double epsilon = 0.0;
  std::size_t grid_size = 0;
  double covered_fraction = 0.0;
  double max_gap = 0.0;  // largest grid-to-orbit Euclidean distance
};

/// For each grid point of E_k, the distance to the nearest orbit point at
/// strictly positive distance; parallel over the grid (CHARVAR_THREADS).
DensityResult epsilon_density(const std::vector<FloatPoint>& orbit, double k, double epsilon,
                              std::size_t grid_n);

/// Y_n: the values y = 2cos(a) in (-2, 2), a rational in pi with denominator
/// <= max_den, whose rotation acos(y/2) has period > 1 and <= n.
std::vector<CycloReal> filtration_Y(int n, int max_den);

}  // namespace charvar
