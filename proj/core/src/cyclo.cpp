#include "charvar/cyclo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace charvar {

namespace {

std::atomic<std::int64_t> g_conductor_cap{5040};

std::vector<std::int64_t> divisors(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (std::int64_t d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      if (d != n / d) out.push_back(n / d);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Exact division of a by monic b over Z, remainder must vanish.
std::vector<Integer> poly_div_exact(std::vector<Integer> a, const std::vector<Integer>& b) {
  const auto db = static_cast<std::int64_t>(b.size()) - 1;
  const auto da = static_cast<std::int64_t>(a.size()) - 1;
  std::vector<Integer> q(da - db + 1, Integer(0));
  for (std::int64_t d = da; d >= db; --d) {
    Integer c = a[d];
    if (c == 0) continue;
    q[d - db] = c;
    for (std::int64_t i = 0; i <= db; ++i) a[d - db + i] -= c * b[i];
  }
  return q;
}

// Conductors stay out of the class 2 mod 4; for odd m, zeta_{2m} = -zeta_m^{(m+1)/2}.
std::int64_t normalize_conductor(std::int64_t n) {
  const std::int64_t m = (n % 4 == 2) ? n / 2 : n;
  if (m > g_conductor_cap.load()) {
    throw ConductorOverflow("conductor " + std::to_string(m) + " exceeds cap " +
                            std::to_string(g_conductor_cap.load()));
  }
  return m;
}

std::int64_t lcm_conductor(std::int64_t a, std::int64_t b) {
  const std::int64_t l = std::lcm(a, b);
  if (l > g_conductor_cap.load()) {
    throw ConductorOverflow("conductor lcm(" + std::to_string(a) + "," + std::to_string(b) +
                            ") = " + std::to_string(l) + " exceeds cap " +
                            std::to_string(g_conductor_cap.load()));
  }
  return l;
}

// Reduce a polynomial in zeta modulo Phi_n, returning phi(n) coefficients.
std::vector<Rational> reduce_mod_phi(std::vector<Rational> p, std::int64_t n) {
  const auto& phi_poly = cyclotomic_polynomial(n);
  const auto phi = static_cast<std::int64_t>(phi_poly.size()) - 1;
  for (auto d = static_cast<std::int64_t>(p.size()) - 1; d >= phi; --d) {
    Rational c = p[d];
    if (c == 0) continue;
    for (std::int64_t i = 0; i <= phi; ++i) {
      p[d - phi + i] -= c * Rational(phi_poly[i]);
      p[d - phi + i].canonicalize();
    }
  }
  p.resize(phi, Rational(0));
  for (auto& c : p) c.canonicalize();
  return p;
}

}  // namespace

std::int64_t euler_phi(std::int64_t n) {
  std::int64_t result = n;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

const std::vector<Integer>& cyclotomic_polynomial(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("cyclotomic_polynomial: n must be positive");
  static std::mutex mu;
  static std::map<std::int64_t, std::vector<Integer>> cache;
  std::scoped_lock lock(mu);
  if (auto it = cache.find(n); it != cache.end()) return it->second;

  // x^n - 1 divided by Phi_d over the proper divisors d of n.
  std::vector<Integer> acc(n + 1, Integer(0));
  acc[0] = -1;
  acc[n] = 1;
  for (std::int64_t d : divisors(n)) {
    if (d == n) continue;
    // Recursion depth is the divisor chain length; compute iteratively instead.
    if (!cache.contains(d)) {
      std::vector<Integer> sub(d + 1, Integer(0));
      sub[0] = -1;
      sub[d] = 1;
      for (std::int64_t e : divisors(d)) {
        if (e == d) continue;
        sub = poly_div_exact(std::move(sub), cache.at(e));
      }
      cache.emplace(d, std::move(sub));
    }
    acc = poly_div_exact(std::move(acc), cache.at(d));
  }
  return cache.emplace(n, std::move(acc)).first->second;
}

void CycloReal::set_conductor_cap(std::int64_t cap) { g_conductor_cap.store(cap); }
std::int64_t CycloReal::conductor_cap() { return g_conductor_cap.load(); }

void CycloReal::demote_if_rational() {
  if (conductor_ == 1) return;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) return;
  }
  Rational v = coeffs_[0];
  conductor_ = 1;
  coeffs_.assign(1, v);
}

CycloReal CycloReal::from_zeta_powers(
    std::int64_t n, const std::vector<std::pair<std::int64_t, Rational>>& terms) {
  if (n < 1) throw std::invalid_argument("from_zeta_powers: conductor must be positive");
  std::int64_t m = normalize_conductor(n);
  std::vector<Rational> poly(m, Rational(0));
  for (auto [e, c] : terms) {
    e %= n;
    if (e < 0) e += n;
    std::int64_t exp = e;
    Rational coeff = c;
    if (m != n) {
      // zeta_n^e = (-1)^e * zeta_m^{e(m+1)/2 mod m}
      if (e % 2 != 0) coeff = -coeff;
      exp = (e % m) * ((m + 1) / 2) % m;
    }
    poly[exp] += coeff;
    poly[exp].canonicalize();
  }
  CycloReal out(m, reduce_mod_phi(std::move(poly), m));
  out.demote_if_rational();
  return out;
}

CycloReal CycloReal::two_cos(const RationalAngle& a) {
  const std::int64_t p = a.num;
  const std::int64_t q = a.den;
  return from_zeta_powers(2 * q, {{p, Rational(1)}, {2 * q - p, Rational(1)}});
}

CycloReal CycloReal::embedded(std::int64_t new_conductor) const {
  const std::int64_t m = normalize_conductor(new_conductor);
  if (m % conductor_ != 0) {
    throw std::invalid_argument("embedded: conductor " + std::to_string(conductor_) +
                                " does not divide " + std::to_string(new_conductor));
  }
  if (m == conductor_) return *this;
  const std::int64_t stride = m / conductor_;
  std::vector<std::pair<std::int64_t, Rational>> terms;
  terms.reserve(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) terms.emplace_back(static_cast<std::int64_t>(i) * stride, coeffs_[i]);
  }
  std::vector<Rational> poly(m, Rational(0));
  for (auto& [e, c] : terms) poly[e] = c;
  // Keep the representation at conductor m even when the value is rational, so
  // coefficient vectors from a common embedding are directly comparable.
  return CycloReal(m, reduce_mod_phi(std::move(poly), m));
}

CycloReal CycloReal::galois_image(std::int64_t k) const {
  if (std::gcd(((k % conductor_) + conductor_) % conductor_, conductor_) != 1) {
    throw std::invalid_argument("galois_image: exponent not coprime to conductor");
  }
  std::vector<std::pair<std::int64_t, Rational>> terms;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) terms.emplace_back(static_cast<std::int64_t>(i) * k, coeffs_[i]);
  }
  return from_zeta_powers(conductor_, terms);
}

CycloReal operator+(const CycloReal& a, const CycloReal& b) {
  const std::int64_t n = lcm_conductor(a.conductor_, b.conductor_);
  CycloReal ea = a.embedded(n);
  CycloReal eb = b.embedded(n);
  for (std::size_t i = 0; i < ea.coeffs_.size(); ++i) {
    ea.coeffs_[i] += eb.coeffs_[i];
    ea.coeffs_[i].canonicalize();
  }
  ea.demote_if_rational();
  return ea;
}

CycloReal operator-(const CycloReal& a, const CycloReal& b) { return a + (-b); }

CycloReal operator*(const CycloReal& a, const CycloReal& b) {
  const std::int64_t n = lcm_conductor(a.conductor_, b.conductor_);
  const CycloReal ea = a.embedded(n);
  const CycloReal eb = b.embedded(n);
  std::vector<Rational> prod(ea.coeffs_.size() + eb.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < ea.coeffs_.size(); ++i) {
    if (ea.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < eb.coeffs_.size(); ++j) {
      if (eb.coeffs_[j] == 0) continue;
      prod[i + j] += ea.coeffs_[i] * eb.coeffs_[j];
      prod[i + j].canonicalize();
    }
  }
  CycloReal out(n, reduce_mod_phi(std::move(prod), n));
  out.demote_if_rational();
  return out;
}

CycloReal CycloReal::operator-() const {
  CycloReal out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

CycloReal CycloReal::scaled(const Rational& r) const {
  CycloReal out = *this;
  for (auto& c : out.coeffs_) {
    c *= r;
    c.canonicalize();
  }
  out.demote_if_rational();
  return out;
}

bool CycloReal::operator==(const CycloReal& b) const {
  if (conductor_ == b.conductor_) return coeffs_ == b.coeffs_;
  const std::int64_t n = lcm_conductor(conductor_, b.conductor_);
  return embedded(n).coeffs_ == b.embedded(n).coeffs_;
}

bool CycloReal::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
}

const Rational& CycloReal::rational_value() const {
  if (!is_rational()) throw std::logic_error("rational_value: not a rational");
  return coeffs_[0];
}

double CycloReal::to_float() const {
  double acc = 0.0;
  const double step = 2.0 * M_PI / static_cast<double>(conductor_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) acc += coeffs_[i].get_d() * std::cos(step * static_cast<double>(i));
  }
  return acc;
}

bool CycloReal::equals_conjugate() const { return galois_image(conductor_ - 1) == *this; }

std::optional<RationalAngle> CycloReal::as_two_cos() const {
  const double vf = to_float();
  if (std::abs(vf) > 2.0 + 1e-9) return std::nullopt;
  if (is_rational()) {
    // Niven: the only rational values of 2cos(rational * pi) are 0, +-1, +-2.
    const Rational& v = coeffs_[0];
    if (v == 0) return RationalAngle(1, 2);
    if (v == 1) return RationalAngle(1, 3);
    if (v == -1) return RationalAngle(2, 3);
    if (v == 2) return RationalAngle(0, 1);
    if (v == -2) return RationalAngle(1, 1);
    return std::nullopt;
  }
  // Scan zeta^k + zeta^{-k} over a conductor that also covers the rational
  // cosines; a float prefilter keeps the exact comparisons rare.
  const std::int64_t m = std::lcm(conductor_, std::int64_t{12});
  for (std::int64_t k = 0; k <= m / 2; ++k) {
    const double c = 2.0 * std::cos(2.0 * M_PI * static_cast<double>(k) / static_cast<double>(m));
    if (std::abs(c - vf) > 1e-6) continue;
    const CycloReal cand =
        from_zeta_powers(m, {{k, Rational(1)}, {(m - k) % m, Rational(1)}});
    if (cand == *this) return RationalAngle(2 * k, m);
  }
  return std::nullopt;
}

std::string CycloReal::key() const {
  std::ostringstream os;
  os << conductor_;
  for (const auto& c : coeffs_) os << '|' << c.get_str();
  return os.str();
}

int compare(const CycloReal& a, const CycloReal& b) {
  if (a == b) return 0;
  const double fa = a.to_float();
  const double fb = b.to_float();
  if (fa < fb) return -1;
  if (fa > fb) return 1;
  // Distinct values numerically indistinguishable at double precision: fall
  // back to the canonical key so the order stays total and deterministic.
  return a.key() < b.key() ? -1 : 1;
}

}  // namespace charvar
