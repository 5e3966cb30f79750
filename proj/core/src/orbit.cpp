#include "charvar/orbit.hpp"

#include <array>
#include <atomic>
#include <cmath>
#include <limits>
#include <cstdlib>
#include <numbers>
#include <numeric>
#include <queue>
#include <random>
#include <set>
#include <thread>
#include <unordered_map>
#include <unordered_set>

#include "charvar/quaternion.hpp"

namespace charvar {

namespace {

std::int64_t point_conductor(const ExactPoint& p) {
  return std::lcm(std::lcm(p.x.conductor(), p.y.conductor()), p.z.conductor());
}

std::string point_key(const ExactPoint& p, std::int64_t n) {
  return p.x.embedded(n).key() + "#" + p.y.embedded(n).key() + "#" + p.z.embedded(n).key();
}

bool all_rational_angles(const ExactPoint& p) {
  return p.x.as_two_cos() && p.y.as_two_cos() && p.z.as_two_cos();
}

}  // namespace

OrbitReport exact_orbit(const ExactPoint& p, std::size_t cap) {
  // Twist images stay inside the starting field: each new coordinate is a
  // polynomial in the old ones, so one lcm conductor keys the whole orbit.
  const std::int64_t n = point_conductor(p);
  OrbitReport report;
  std::unordered_set<std::string> seen;
  std::queue<ExactPoint> pending;

  auto visit = [&](const ExactPoint& q) -> bool {
    if (!seen.insert(point_key(q, n)).second) return true;
    report.points.push_back(q);
    if (!all_rational_angles(q)) {
      report.witness = q;
      return false;
    }
    pending.push(q);
    return true;
  };

  if (!visit(p)) return report;
  while (!pending.empty()) {
    ExactPoint cur = pending.front();
    pending.pop();
    for (Twist t : {Twist::X, Twist::XInv, Twist::Y, Twist::YInv}) {
      if (report.points.size() >= cap) {
        report.inconclusive = true;
        return report;
      }
      if (!visit(apply_twist(t, cur))) return report;
    }
  }
  report.closed = true;
  return report;
}

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Spin2Fiber: return "Spin2Fiber";
    case Verdict::Pin2Point: return "Pin2Point";
    case Verdict::FiniteOrbit: return "FiniteOrbit";
    case Verdict::Dense: return "Dense";
    case Verdict::DenseCandidate: return "DenseCandidate";
  }
  throw std::logic_error("verdict_name: bad verdict");
}

Classification classify(const ExactPoint& p, std::size_t cap) {
  Classification out;
  const CycloReal k = boundary_trace(p);
  out.k = k.to_float();
  out.k_exact = k;
  if (out.k < -2.0 - 1e-9 || out.k > 2.0 + 1e-9)
    throw std::domain_error("classify: boundary trace outside [-2, 2]");

  if (k == CycloReal(2)) {
    out.verdict = Verdict::Spin2Fiber;
    return out;
  }
  if (classify_pin(p) == PinClass::Pin2) {
    out.verdict = Verdict::Pin2Point;
    return out;
  }
  if (!all_rational_angles(p)) {
    // An irrational rotation angle at some coordinate already forces density.
    out.verdict = Verdict::Dense;
    out.witness = p;
    return out;
  }

  OrbitReport orbit = exact_orbit(p, cap);
  if (orbit.witness) {
    out.verdict = Verdict::Dense;
    out.witness = orbit.witness;
    return out;
  }
  if (orbit.inconclusive)
    throw InconclusiveOrbit("classify: orbit cap " + std::to_string(cap) +
                            " hit without closure or witness");

  out.verdict = Verdict::FiniteOrbit;
  out.orbit_size = orbit.points.size();
  const auto& classes = table1_canonical_classes();
  for (const ExactPoint& q : orbit.points) {
    ExactPoint c = s_canonical(q, true);
    if (std::find(classes.begin(), classes.end(), c) != classes.end()) {
      out.table1_class = c;
      break;
    }
  }
  return out;
}

std::optional<RationalAngle> snap_to_cos_angle(double value, int max_den, double tol) {
  if (!(std::abs(value) <= 2.0 + tol)) return std::nullopt;
  const double theta = std::acos(std::clamp(value / 2.0, -1.0, 1.0)) / std::numbers::pi;
  for (int q = 1; q <= max_den; ++q) {
    const auto p = static_cast<std::int64_t>(std::llround(theta * q));
    if (p < 0 || p > q) continue;
    if (std::abs(2.0 * std::cos(std::numbers::pi * static_cast<double>(p) / q) - value) <= tol)
      return RationalAngle(p, q);
  }
  return std::nullopt;
}

Classification classify(const FloatPoint& p, int max_den, double tol, std::size_t cap) {
  const double k = boundary_trace(p);
  if (std::abs(k - 2.0) <= tol) {
    Classification out;
    out.verdict = Verdict::Spin2Fiber;
    out.k = k;
    return out;
  }
  if (classify_pin(p) == PinClass::Pin2) {
    Classification out;
    out.verdict = Verdict::Pin2Point;
    out.k = k;
    return out;
  }

  const auto ax = snap_to_cos_angle(p.x, max_den, tol);
  const auto ay = snap_to_cos_angle(p.y, max_den, tol);
  const auto az = snap_to_cos_angle(p.z, max_den, tol);
  if (ax && ay && az) {
    ExactPoint exact{CycloReal::two_cos(*ax), CycloReal::two_cos(*ay), CycloReal::two_cos(*az)};
    Classification out = classify(exact, cap);
    out.notes.push_back("coordinates snapped to rational cosines (max_den=" +
                        std::to_string(max_den) + ")");
    return out;
  }
  Classification out;
  out.verdict = Verdict::DenseCandidate;
  out.k = k;
  out.notes.push_back("coordinate not a recognized rational cosine; heuristic verdict");
  return out;
}

FloatOrbitResult float_orbit(const FloatPoint& p, std::size_t steps, const WordPolicy& policy,
                             std::uint64_t seed) {
  static constexpr double kAbortDrift = 1e-6;
  static constexpr Twist kTwists[4] = {Twist::X, Twist::XInv, Twist::Y, Twist::YInv};

  std::mt19937_64 rng(seed);
  const double k0 = boundary_trace(p);
  FloatOrbitResult out;
  out.points.reserve(steps + 1);
  out.points.push_back(p);

  const int xp = std::max(1, policy.x_period);
  const int yp = std::max(1, policy.y_period);
  FloatPoint cur = p;
  for (std::size_t i = 0; i < steps; ++i) {
    Twist t;
    if (policy.kind == WordPolicy::Kind::UniformRandom) {
      t = kTwists[rng() & 3];
    } else {
      const auto phase = static_cast<int>(i % static_cast<std::size_t>(xp + yp));
      t = phase < xp ? Twist::X : Twist::Y;
    }
    cur = apply_twist(t, cur);
    const double drift = std::abs(boundary_trace(cur) - k0);
    out.max_drift = std::max(out.max_drift, drift);
    if (drift > kAbortDrift) {
      out.aborted = true;
      break;
    }
    out.points.push_back(cur);
  }
  return out;
}

std::vector<FloatPoint> sphere_grid(double k, std::size_t n) {
  if (!(k > -2.0 && k < 2.0))
    throw std::domain_error("sphere_grid: need -2 < k < 2");
  if (n == 0) return {};

  const double x_max = std::sqrt(2.0 + k);
  const auto levels =
      std::max<std::size_t>(1, std::min(n, static_cast<std::size_t>(std::lround(
                                               std::sqrt(static_cast<double>(n) / 2.0)) + 1)));
  std::vector<double> xs(levels), radii(levels);
  double weight_sum = 0.0;
  for (std::size_t j = 0; j < levels; ++j) {
    xs[j] = x_max * ((2.0 * static_cast<double>(j) + 1.0) / static_cast<double>(levels) - 1.0);
    radii[j] = std::sqrt(std::max(0.0, 2.0 + k - xs[j] * xs[j]));
    weight_sum += radii[j];
  }

  // Largest-remainder split of n proportional to the circle radii.
  std::vector<std::size_t> counts(levels, 0);
  std::vector<std::pair<double, std::size_t>> remainders(levels);
  std::size_t assigned = 0;
  for (std::size_t j = 0; j < levels; ++j) {
    const double share = static_cast<double>(n) * radii[j] / weight_sum;
    counts[j] = static_cast<std::size_t>(share);
    assigned += counts[j];
    remainders[j] = {share - static_cast<double>(counts[j]), j};
  }
  std::sort(remainders.rbegin(), remainders.rend());
  for (std::size_t i = 0; assigned < n; ++i, ++assigned) ++counts[remainders[i % levels].second];

  std::vector<FloatPoint> out;
  out.reserve(n);
  for (std::size_t j = 0; j < levels; ++j) {
    const double offset = 0.5 * static_cast<double>(j);  // stagger rings
    for (std::size_t i = 0; i < counts[j]; ++i) {
      const double a =
          2.0 * std::numbers::pi * (static_cast<double>(i) + offset) / static_cast<double>(counts[j]);
      out.push_back(from_tilde({xs[j], radii[j] * std::cos(a), radii[j] * std::sin(a)}));
    }
  }
  return out;
}

namespace {

unsigned worker_count() {
  if (const char* env = std::getenv("CHARVAR_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

// Uniform-cell spatial hash over the orbit for nearest-neighbor queries.
class CellIndex {
 public:
  CellIndex(const std::vector<FloatPoint>& points, double cell) : points_(points), cell_(cell) {
    for (std::size_t i = 0; i < points.size(); ++i) cells_[pack(cell_of(points[i]))].push_back(i);
  }

  // Smallest strictly positive distance from q to an orbit point.
  double nearest_positive(const FloatPoint& q) const {
    const std::array<std::int64_t, 3> c = cell_of(q);
    double best = std::numeric_limits<double>::infinity();
    // All coordinates live in [-4, 4]; the shell radius is bounded accordingly.
    const auto max_ring = static_cast<std::int64_t>(std::ceil(10.0 / cell_)) + 1;
    for (std::int64_t ring = 0; ring <= max_ring; ++ring) {
      scan_shell(q, c, ring, best);
      // Points beyond shell `ring` are at least ring*cell away.
      if (best <= static_cast<double>(ring) * cell_) break;
    }
    return best;
  }

 private:
  static std::uint64_t pack(const std::array<std::int64_t, 3>& c) {
    constexpr std::int64_t kOffset = 1 << 20;
    return (static_cast<std::uint64_t>(c[0] + kOffset) << 42) |
           (static_cast<std::uint64_t>(c[1] + kOffset) << 21) |
           static_cast<std::uint64_t>(c[2] + kOffset);
  }

  std::array<std::int64_t, 3> cell_of(const FloatPoint& p) const {
    return {static_cast<std::int64_t>(std::floor(p.x / cell_)),
            static_cast<std::int64_t>(std::floor(p.y / cell_)),
            static_cast<std::int64_t>(std::floor(p.z / cell_))};
  }

  void scan_cell(const FloatPoint& q, const std::array<std::int64_t, 3>& c, double& best) const {
    const auto it = cells_.find(pack(c));
    if (it == cells_.end()) return;
    for (std::size_t i : it->second) {
      const FloatPoint& p = points_[i];
      const double dx = p.x - q.x, dy = p.y - q.y, dz = p.z - q.z;
      const double d = std::sqrt(dx * dx + dy * dy + dz * dz);
      if (d > 1e-12 && d < best) best = d;
    }
  }

  void scan_shell(const FloatPoint& q, const std::array<std::int64_t, 3>& c, std::int64_t ring,
                  double& best) const {
    if (ring == 0) {
      scan_cell(q, c, best);
      return;
    }
    for (std::int64_t dx = -ring; dx <= ring; ++dx) {
      for (std::int64_t dy = -ring; dy <= ring; ++dy) {
        for (std::int64_t dz = -ring; dz <= ring; ++dz) {
          if (std::max({std::abs(dx), std::abs(dy), std::abs(dz)}) != ring) continue;
          scan_cell(q, {c[0] + dx, c[1] + dy, c[2] + dz}, best);
        }
      }
    }
  }

  const std::vector<FloatPoint>& points_;
  double cell_;
  std::unordered_map<std::uint64_t, std::vector<std::size_t>> cells_;
};

}  // namespace

DensityResult epsilon_density(const std::vector<FloatPoint>& orbit, double k, double epsilon,
                              std::size_t grid_n) {
  if (orbit.empty()) throw std::invalid_argument("epsilon_density: empty orbit");
  if (!(epsilon > 0.0)) throw std::invalid_argument("epsilon_density: need epsilon > 0");

  const std::vector<FloatPoint> grid = sphere_grid(k, grid_n);
  // Keep cells coarse enough that a lone far-away query stays cheap.
  const CellIndex index(orbit, std::max(epsilon, 0.05));

  const unsigned workers = std::min<unsigned>(worker_count(),
                                              std::max<std::size_t>(1, grid.size()));
  std::vector<std::size_t> covered(workers, 0);
  std::vector<double> max_gap(workers, 0.0);
  std::atomic<std::size_t> next{0};
  constexpr std::size_t kChunk = 64;

  auto run = [&](unsigned w) {
    for (;;) {
      const std::size_t begin = next.fetch_add(kChunk);
      if (begin >= grid.size()) return;
      const std::size_t end = std::min(grid.size(), begin + kChunk);
      for (std::size_t i = begin; i < end; ++i) {
        const double d = index.nearest_positive(grid[i]);
        if (d < epsilon) ++covered[w];
        max_gap[w] = std::max(max_gap[w], d);
      }
    }
  };
  std::vector<std::thread> threads;
  for (unsigned w = 1; w < workers; ++w) threads.emplace_back(run, w);
  run(0);
  for (auto& t : threads) t.join();

  DensityResult out;
  out.epsilon = epsilon;
  out.grid_size = grid.size();
  const auto covered_total = std::accumulate(covered.begin(), covered.end(), std::size_t{0});
  out.covered_fraction =
      grid.empty() ? 0.0 : static_cast<double>(covered_total) / static_cast<double>(grid.size());
  out.max_gap = *std::max_element(max_gap.begin(), max_gap.end());
  return out;
}

std::vector<CycloReal> filtration_Y(int n, int max_den) {
  std::vector<CycloReal> out;
  std::set<std::string> seen;
  for (int q = 1; q <= max_den; ++q) {
    for (int p = 1; p < 2 * q; ++p) {
      if (std::gcd(p, q) != 1) continue;
      if (p == q) continue;  // y = -2: not an interior value
      // The rotation by acos(y/2), y = 2cos(p pi / q), has order 2q for odd p
      // (the half-angle picks up the sign) and order q otherwise.
      const std::int64_t order = (p % 2 == 1) ? 2 * q : q;
      if (order <= 1 || order > n) continue;
      CycloReal y = CycloReal::two_cos(RationalAngle(p, q));
      if (seen.insert(y.key()).second) out.push_back(std::move(y));
    }
  }
  std::sort(out.begin(), out.end(),
            [](const CycloReal& a, const CycloReal& b) { return compare(a, b) < 0; });
  return out;
}

}  // namespace charvar
