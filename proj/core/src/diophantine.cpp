#include "charvar/diophantine.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace charvar {

namespace {

// Scoped conductor-cap raise: the verification sweeps combine angles whose
// lcm conductor can exceed the default orbit-iteration cap.
class CapRaise {
 public:
  explicit CapRaise(std::int64_t at_least) : saved_(CycloReal::conductor_cap()) {
    if (saved_ < at_least) CycloReal::set_conductor_cap(at_least);
  }
  ~CapRaise() { CycloReal::set_conductor_cap(saved_); }

 private:
  std::int64_t saved_;
};

bool angle_above_right(const RationalAngle& a) { return 2 * a.num > a.den; }  // > pi/2
bool angle_is_right(const RationalAngle& a) { return 2 * a.num == a.den; }

CosineTerm fold_term(Rational coeff, RationalAngle angle) {
  angle = angle.folded_to_pi();
  if (angle_above_right(angle)) {
    coeff = -coeff;
    angle = RationalAngle(angle.den - angle.num, angle.den);
  }
  return {coeff, angle};
}

}  // namespace

CosineCombination normalize(const CosineCombination& c) {
  std::map<RationalAngle, Rational> merged;
  Rational rhs = c.rhs;
  for (const auto& term : c.terms) {
    CosineTerm f = fold_term(term.coeff, term.angle);
    if (f.angle.is_zero()) {
      rhs -= f.coeff;  // cos(0) = 1 folds into the right side
      continue;
    }
    if (angle_is_right(f.angle)) continue;  // cos(pi/2) = 0
    merged[f.angle] += f.coeff;
  }
  CosineCombination out;
  out.rhs = rhs;
  for (auto& [angle, coeff] : merged) {
    if (coeff != 0) out.terms.push_back({coeff, angle});
  }
  return out;
}

CycloReal exact_value(const CosineCombination& c) {
  CycloReal acc(Rational(-c.rhs));
  for (const auto& term : c.terms) {
    acc += CycloReal::two_cos(term.angle).scaled(term.coeff / 2);
  }
  return acc;
}

namespace {

TwistEquation twist_equation(const RationalAngle& first, const RationalAngle& opposite,
                             const RationalAngle& second) {
  // cos(a+c) + cos(a-c) - cos(b) with value (2cos(a)*2cos(c) - 2cos(b)) / 2.
  CosineCombination combo;
  combo.terms = {{Rational(1), first + second},
                 {Rational(1), first - second},
                 {Rational(-1), opposite}};
  combo.rhs = 0;
  TwistEquation eq;
  eq.combo = normalize(combo);
  eq.image = CycloReal::two_cos(first) * CycloReal::two_cos(second) -
             CycloReal::two_cos(opposite);
  return eq;
}

}  // namespace

TwistEquation tau_x_equation(const RationalAngle& tx, const RationalAngle& ty,
                             const RationalAngle& tz) {
  return twist_equation(tx, ty, tz);
}

TwistEquation tau_y_equation(const RationalAngle& tx, const RationalAngle& ty,
                             const RationalAngle& tz) {
  return twist_equation(ty, tx, tz);
}

std::optional<std::string> cancellation_implies_k2(const ExactPoint& p) {
  if (p.x.is_zero() || p.y.is_zero() || p.z.is_zero()) return std::nullopt;
  const auto tx = p.x.as_two_cos();
  const auto tz = p.z.as_two_cos();
  if (!tx || !tz) return std::nullopt;

  const CycloReal sum_term = CycloReal::two_cos(*tx + *tz);   // 2cos(tx+tz)
  const CycloReal diff_term = CycloReal::two_cos(*tx - *tz);  // 2cos(tx-tz)
  const CycloReal image = p.x * p.z - p.y;                    // 2cos(t_{xz-y}) if rational

  std::optional<std::string> tag;
  if (sum_term == p.y) tag = "cos(ty) = cos(tx+tz)";
  else if (diff_term == p.y) tag = "cos(ty) = cos(tx-tz)";
  else if (sum_term == image) tag = "cos(t_{xz-y}) = cos(tx+tz)";
  else if (diff_term == image) tag = "cos(t_{xz-y}) = cos(tx-tz)";
  if (!tag) return std::nullopt;

  if (!(boundary_trace(p) == CycloReal(2))) {
    throw std::logic_error("cancellation fired with k != 2 at a nonzero-coordinate point");
  }
  return tag;
}

namespace {

CosineCombination mk(std::initializer_list<std::tuple<int, int, int>> terms, Rational rhs) {
  CosineCombination c;
  for (auto [coeff, p, q] : terms) c.terms.push_back({Rational(coeff), RationalAngle(p, q)});
  c.rhs = std::move(rhs);
  return c;
}

const std::vector<RationalAngle>& param_samples() {
  // rational t in (0, pi/6)
  static const std::vector<RationalAngle> ts = {
      RationalAngle(1, 30), RationalAngle(1, 12), RationalAngle(1, 10), RationalAngle(1, 14)};
  return ts;
}

CosineCombination param_family_at(const RationalAngle& t) {
  CosineCombination c;
  c.terms = {{Rational(1), t + RationalAngle(1, 3)},
             {Rational(1), RationalAngle(1, 3) - t},
             {Rational(-1), t}};
  c.rhs = 0;
  return c;
}

/// Vanishing equations 2..5, normalized.
const std::vector<CosineCombination>& vanishing_equations() {
  static const std::vector<CosineCombination> eqs = {
      normalize(mk({{1, 1, 5}, {-1, 2, 5}, {-1, 1, 3}}, 0)),
      normalize(mk({{1, 1, 7}, {-1, 2, 7}, {1, 3, 7}, {-1, 1, 3}}, 0)),
      normalize(mk({{1, 1, 5}, {-1, 1, 15}, {1, 4, 15}, {-1, 1, 3}}, 0)),
      normalize(mk({{-1, 2, 5}, {1, 2, 15}, {-1, 7, 15}, {-1, 1, 3}}, 0)),
  };
  return eqs;
}

}  // namespace

CjReport verify_cj_lists() {
  CapRaise cap(120960);
  CjReport report;
  report.all_pass = true;
  auto check = [&](std::string name, const CosineCombination& c) {
    const bool pass = exact_value(normalize(c)).is_zero();
    report.all_pass = report.all_pass && pass;
    report.lines.push_back({std::move(name), pass});
  };

  // Rational-sum list.
  check("rational-1: cos(pi/3) = 1/2", mk({{1, 1, 3}}, Rational(1, 2)));
  for (const auto& t : param_samples()) {
    check("rational-2 (t = " + t.str() + ")", param_family_at(t));
  }
  check("rational-3: cos(pi/5) - cos(2pi/5) = 1/2",
        mk({{1, 1, 5}, {-1, 2, 5}}, Rational(1, 2)));
  check("rational-4: cos(pi/7) - cos(2pi/7) + cos(3pi/7) = 1/2",
        mk({{1, 1, 7}, {-1, 2, 7}, {1, 3, 7}}, Rational(1, 2)));
  check("rational-5: cos(pi/5) - cos(pi/15) + cos(4pi/15) = 1/2",
        mk({{1, 1, 5}, {-1, 1, 15}, {1, 4, 15}}, Rational(1, 2)));
  check("rational-6: -cos(2pi/5) + cos(2pi/15) - cos(7pi/15) = 1/2",
        mk({{-1, 2, 5}, {1, 2, 15}, {-1, 7, 15}}, Rational(1, 2)));
  check("rational-7: cos(pi/7) + cos(3pi/7) - cos(pi/21) + cos(8pi/21) = 1/2",
        mk({{1, 1, 7}, {1, 3, 7}, {-1, 1, 21}, {1, 8, 21}}, Rational(1, 2)));
  check("rational-8: cos(pi/7) - cos(2pi/7) + cos(2pi/21) - cos(5pi/21) = 1/2",
        mk({{1, 1, 7}, {-1, 2, 7}, {1, 2, 21}, {-1, 5, 21}}, Rational(1, 2)));
  check("rational-9: -cos(2pi/7) + cos(3pi/7) + cos(4pi/21) + cos(10pi/21) = 1/2",
        mk({{-1, 2, 7}, {1, 3, 7}, {1, 4, 21}, {1, 10, 21}}, Rational(1, 2)));
  check("rational-10: -cos(pi/15) + cos(2pi/15) + cos(4pi/15) - cos(7pi/15) = 1/2",
        mk({{-1, 1, 15}, {1, 2, 15}, {1, 4, 15}, {-1, 7, 15}}, Rational(1, 2)));

  // Vanishing list.
  for (const auto& t : param_samples()) {
    check("vanishing-1 (t = " + t.str() + ")", param_family_at(t));
  }
  const char* names[] = {
      "vanishing-2: cos(pi/5) - cos(2pi/5) - cos(pi/3) = 0",
      "vanishing-3: cos(pi/7) - cos(2pi/7) + cos(3pi/7) - cos(pi/3) = 0",
      "vanishing-4: cos(pi/5) - cos(pi/15) + cos(4pi/15) - cos(pi/3) = 0",
      "vanishing-5: -cos(2pi/5) + cos(2pi/15) - cos(7pi/15) - cos(pi/3) = 0",
  };
  for (std::size_t i = 0; i < vanishing_equations().size(); ++i) {
    check(names[i], vanishing_equations()[i]);
  }
  return report;
}

namespace {

CosineCombination canonical_proportional(CosineCombination c) {
  // c is normalized: terms sorted by angle, nonzero coefficients.
  if (c.terms.empty()) return c;
  const Rational lead = c.terms.front().coeff;
  for (auto& t : c.terms) {
    t.coeff /= lead;
    t.coeff.canonicalize();
  }
  c.rhs /= lead;
  c.rhs.canonicalize();
  return c;
}

std::string combo_key(const CosineCombination& c) {
  std::ostringstream os;
  for (const auto& t : c.terms) {
    os << t.coeff.get_str() << "*" << t.angle.num << "/" << t.angle.den << ";";
  }
  os << "=" << c.rhs.get_str();
  return os.str();
}

}  // namespace

std::vector<CosineCombination> search_vanishing(int max_den,
                                                const std::vector<Rational>& coeff_set) {
  if (max_den > 30) throw std::invalid_argument("search_vanishing: max_den bound is 30");
  CapRaise cap(2'000'000);

  std::vector<RationalAngle> angles;
  for (int q = 3; q <= max_den; ++q) {
    for (int p = 1; 2 * p < q; ++p) {
      if (std::gcd(p, q) == 1) angles.emplace_back(p, q);
    }
  }
  std::sort(angles.begin(), angles.end());
  const std::size_t na = angles.size();
  std::vector<double> cosv(na);
  for (std::size_t i = 0; i < na; ++i) cosv[i] = std::cos(angles[i].radians());
  std::vector<double> coeffd(coeff_set.size());
  for (std::size_t i = 0; i < coeff_set.size(); ++i) coeffd[i] = coeff_set[i].get_d();

  auto exact_vanishes = [&](const std::vector<std::size_t>& idx,
                            const std::vector<std::size_t>& cs) {
    CosineCombination c;
    for (std::size_t j = 0; j < idx.size(); ++j) {
      c.terms.push_back({coeff_set[cs[j]], angles[idx[j]]});
    }
    return exact_value(c).is_zero();
  };

  std::unordered_set<std::string> seen;
  std::vector<CosineCombination> out;

  auto consider = [&](const std::vector<std::size_t>& idx, const std::vector<std::size_t>& cs) {
    double sum = 0;
    for (std::size_t j = 0; j < idx.size(); ++j) sum += coeffd[cs[j]] * cosv[idx[j]];
    if (std::abs(sum) > 1e-9) return;
    if (!exact_vanishes(idx, cs)) return;
    // Minimality: no proper nonempty subset may vanish.
    const std::size_t m = idx.size();
    for (std::size_t mask = 1; mask + 1 < (std::size_t{1} << m); ++mask) {
      std::vector<std::size_t> si, sc;
      double ssum = 0;
      for (std::size_t j = 0; j < m; ++j) {
        if (mask & (std::size_t{1} << j)) {
          si.push_back(idx[j]);
          sc.push_back(cs[j]);
          ssum += coeffd[cs[j]] * cosv[idx[j]];
        }
      }
      if (std::abs(ssum) < 1e-9 && exact_vanishes(si, sc)) return;
    }
    CosineCombination c;
    for (std::size_t j = 0; j < m; ++j) c.terms.push_back({coeff_set[cs[j]], angles[idx[j]]});
    c = canonical_proportional(normalize(c));
    if (seen.insert(combo_key(c)).second) out.push_back(std::move(c));
  };

  // All subsets of 1..4 distinct angles, all coefficient assignments.
  std::vector<std::size_t> idx, cs;
  auto assign_coeffs = [&](auto&& self, std::size_t j) -> void {
    if (j == idx.size()) {
      consider(idx, cs);
      return;
    }
    for (std::size_t ci = 0; ci < coeff_set.size(); ++ci) {
      cs[j] = ci;
      self(self, j + 1);
    }
  };
  auto choose = [&](auto&& self, std::size_t start, std::size_t remaining) -> void {
    if (!idx.empty()) {
      cs.assign(idx.size(), 0);
      assign_coeffs(assign_coeffs, 0);
    }
    if (remaining == 0) return;
    for (std::size_t i = start; i < na; ++i) {
      idx.push_back(i);
      self(self, i + 1, remaining - 1);
      idx.pop_back();
    }
  };
  choose(choose, 0, 4);
  return out;
}

CjMatchResult match_cj(const CosineCombination& c) {
  CjMatchResult result;
  CosineCombination n = normalize(c);
  if (n.terms.empty()) {
    result.degenerate = n.rhs == 0;
    return result;
  }
  if (n.rhs != 0) return result;
  n = canonical_proportional(n);

  // Parametric family: coefficients (1, -1, -1) on (t, pi/3 - t, pi/3 + t).
  if (n.terms.size() == 3) {
    const RationalAngle t = n.terms[0].angle;
    const RationalAngle third(1, 3);
    if (6 * t.num < t.den &&  // t < pi/6
        n.terms[0].coeff == 1 && n.terms[1].coeff == -1 && n.terms[2].coeff == -1 &&
        n.terms[1].angle == third - t && n.terms[2].angle == third + t) {
      result.id = CjMatch{1, t};
      return result;
    }
  }
  const auto& eqs = vanishing_equations();
  for (std::size_t i = 0; i < eqs.size(); ++i) {
    if (canonical_proportional(eqs[i]) == n) {
      result.id = CjMatch{static_cast<int>(i) + 2, std::nullopt};
      return result;
    }
  }
  return result;
}

}  // namespace charvar
