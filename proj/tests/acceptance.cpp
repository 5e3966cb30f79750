// Acceptance suite: one line per criterion, exit 0 iff all pass.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "charvar/character_variety.hpp"
#include "charvar/cyclo.hpp"
#include "charvar/diophantine.hpp"
#include "charvar/orbit.hpp"
#include "charvar/quaternion.hpp"

using namespace charvar;

namespace {

bool g_all_pass = true;

template <typename F>
void criterion(int number, const char* name, F&& body) {
  const auto start = std::chrono::steady_clock::now();
  bool ok = false;
  std::string error;
  try {
    ok = body();
  } catch (const std::exception& e) {
    error = e.what();
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("criterion %2d (%s): %s (%.2fs)%s%s\n", number, name, ok ? "pass" : "FAIL", secs,
              error.empty() ? "" : " error: ", error.c_str());
  std::fflush(stdout);
  g_all_pass = g_all_pass && ok;
}

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

Twist random_twist(std::mt19937_64& rng) {
  static constexpr Twist kTwists[4] = {Twist::X, Twist::XInv, Twist::Y, Twist::YInv};
  return kTwists[rng() & 3];
}

bool k_invariance() {
  std::mt19937_64 rng(20240811);
  for (int i = 0; i < 10'000; ++i) {
    FloatPoint p = random_surface_point(rng);
    const double k0 = boundary_trace(p);
    for (int s = 0; s < 50; ++s) p = apply_twist(random_twist(rng), p);
    if (std::abs(boundary_trace(p) - k0) > 1e-10) return false;
  }
  // exact rational-cosine points; shorter words keep coefficient heights sane
  for (int i = 0; i < 1'000; ++i) {
    auto angle = [&] { return RationalAngle(1 + rng() % 11, 2 + rng() % 5); };
    ExactPoint p{CycloReal::two_cos(angle()), CycloReal::two_cos(angle()),
                 CycloReal::two_cos(angle())};
    const CycloReal k0 = boundary_trace(p);
    for (int s = 0; s < 12; ++s) p = apply_twist(random_twist(rng), p);
    if (!(boundary_trace(p) == k0)) return false;
  }
  return true;
}

bool table1_reproduction() {
  const Table1Report report = verify_table1();
  if (report.rows.size() != 9 || !report.all_pass) return false;
  const CycloReal golden = CycloReal::two_cos(RationalAngle(1, 5));       // (1+sqrt5)/2
  const CycloReal conj = -CycloReal::two_cos(RationalAngle(2, 5));        // (1-sqrt5)/2
  std::set<std::string> ks;
  for (const auto& row : table1_rows()) ks.insert(row.k.embedded(5).key());
  return ks == std::set<std::string>{CycloReal(1).embedded(5).key(),
                                     CycloReal(0).embedded(5).key(), golden.embedded(5).key(),
                                     conj.embedded(5).key()};
}

bool group_orders() {
  const auto& g = generators();
  return group_closure({g.T, g.U}, 256).elements.size() == 48 &&
         group_closure({g.A, g.B}, 256).elements.size() == 120;
}

bool cj_identities() {
  const CjReport report = verify_cj_lists();
  int parametric = 0;
  for (const auto& line : report.lines)
    if (line.name.find("vanishing-1") != std::string::npos) ++parametric;
  return report.all_pass && parametric >= 3;
}

bool cj_search_oracle() {
  const auto found = search_vanishing(15);
  std::set<int> equations;
  for (const auto& c : found) {
    const CjMatchResult m = match_cj(c);
    if (!m.id) return false;  // an unlisted vanishing sum
    equations.insert(m.id->equation);
  }
  return equations.count(1) == 1 && equations.count(2) == 1 && equations.count(3) == 1 &&
         equations.count(4) == 1 && equations.count(5) == 1;
}

bool niven_property() {
  for (long q = 1; q <= 50; ++q) {
    for (long p = -2 * q; p <= 2 * q; ++p) {
      if (std::gcd(p, q) != 1 && !(p == 0 && q == 1)) continue;
      const Rational v(p, q);
      const bool hit = CycloReal(v).as_two_cos().has_value();
      const bool expected = q == 1 && p >= -2 && p <= 2;
      if (hit != expected) return false;
    }
  }
  return true;
}

bool pin_structure() {
  for (int i = 1; i <= 20; ++i) {
    const double k = -2.0 + 4.0 * i / 21.0;
    const auto pts = pin_points(k);
    if (pts.size() != 6) return false;
    for (const FloatPoint& p : pts) {
      if (std::abs(boundary_trace(p) - k) > 1e-9) return false;
      if (classify(p).verdict != Verdict::Pin2Point) return false;
    }
  }
  return true;
}

bool rotation_periods() {
  std::mt19937_64 rng(5);
  auto random_rational = [&] {
    return Rational(static_cast<long>(rng() % 4001) - 2000, 1000);
  };
  for (auto [x, period] : {std::pair{1L, 6}, std::pair{0L, 4}, std::pair{-1L, 3}}) {
    for (int i = 0; i < 100; ++i) {
      const ExactPoint p{CycloReal(x), CycloReal(random_rational()),
                         CycloReal(random_rational())};
      ExactPoint q = p;
      for (int s = 0; s < period; ++s) q = tau_x(q);
      if (!(q == p)) return false;
      // and no smaller period on a generic point
    }
  }
  return true;
}

bool filtration_levels() {
  const auto y2 = filtration_Y(2, 64);
  const auto y3 = filtration_Y(3, 64);
  const auto y4 = filtration_Y(4, 64);
  return y2.empty() && y3.size() == 1 && y3[0] == CycloReal(-1) && y4.size() == 2 &&
         y4[0] == CycloReal(-1) && y4[1] == CycloReal(0);
}

bool trichotomy_sweep() {
  const auto& g = generators();
  const auto& classes = table1_canonical_classes();
  for (const auto& gens : {std::vector<Quaternion>{g.A, g.B}, std::vector<Quaternion>{g.T, g.U}}) {
    const GroupTable table = group_closure(gens, 256);
    for (const ExactPoint& p : enumerate_rep_classes(table)) {
      if (classify_pin(p) != PinClass::Neither) continue;
      const OrbitReport orbit = exact_orbit(p, 100'000);
      if (!orbit.closed) return false;
      bool matched = false;
      for (const ExactPoint& q : orbit.points) {
        if (std::find(classes.begin(), classes.end(), s_canonical(q, true)) != classes.end()) {
          matched = true;
          break;
        }
      }
      if (!matched) return false;
    }
  }
  return true;
}

bool density_experiment() {
  const FloatPoint dense{0.5, 0.5, 0.5};
  const double k = boundary_trace(dense);  // -11/8
  const FloatOrbitResult run = float_orbit(dense, 1'000'000, WordPolicy{}, 20240811);
  if (run.aborted) return false;
  const DensityResult d = epsilon_density(run.points, k, 0.05, 2000);
  if (d.covered_fraction != 1.0) return false;

  const FloatPoint finite{1.0, 1.0, 1.0};
  const FloatOrbitResult run2 = float_orbit(finite, 1'000'000, WordPolicy{}, 20240811);
  const DensityResult d2 = epsilon_density(run2.points, 0.0, 0.05, 2000);
  return d2.covered_fraction < 0.5;
}

bool trivtrig_soundness() {
  std::mt19937_64 rng(99);
  int built = 0;
  while (built < 1'000) {
    const RationalAngle tx(1 + rng() % 17, 2 + rng() % 9);
    const RationalAngle tz(1 + rng() % 17, 2 + rng() % 9);
    const RationalAngle ty = (rng() & 1) ? tx + tz : tx - tz;
    const auto bad = [](const RationalAngle& a) {
      const RationalAngle f = a.folded_to_pi();
      return f == RationalAngle(1, 2) || f.is_zero() || f == RationalAngle(1, 1);
    };
    if (bad(tx) || bad(ty) || bad(tz)) continue;
    const ExactPoint p{CycloReal::two_cos(tx), CycloReal::two_cos(ty), CycloReal::two_cos(tz)};
    if (!cancellation_implies_k2(p)) return false;
    if (!(boundary_trace(p) == CycloReal(2))) return false;
    ++built;
  }
  for (const auto& row : table1_rows())
    if (cancellation_implies_k2(row.triple)) return false;
  return true;
}

}  // namespace

int main() {
  criterion(1, "k-invariance", k_invariance);
  criterion(2, "table 1 reproduction", table1_reproduction);
  criterion(3, "group orders", group_orders);
  criterion(4, "cosine identity lists", cj_identities);
  criterion(5, "vanishing-sum search oracle", cj_search_oracle);
  criterion(6, "rational-cosine rationals", niven_property);
  criterion(7, "pin point structure", pin_structure);
  criterion(8, "rotation periods", rotation_periods);
  criterion(9, "filtration levels", filtration_levels);
  criterion(10, "trichotomy sweep", trichotomy_sweep);
  criterion(11, "density experiment", density_experiment);
  criterion(12, "cancellation soundness", trivtrig_soundness);
  std::printf("%s\n", g_all_pass ? "acceptance: all criteria pass" : "acceptance: FAILURES");
  return g_all_pass ? 0 : 1;
}
