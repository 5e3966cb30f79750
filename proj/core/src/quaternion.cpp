#include "charvar/quaternion.hpp"

#include <cctype>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <unordered_set>

namespace charvar {

Quaternion q_mul(const Quaternion& p, const Quaternion& q) {
  return {
      p.a * q.a - p.b * q.b - p.c * q.c - p.d * q.d,
      p.a * q.b + p.b * q.a + p.c * q.d - p.d * q.c,
      p.a * q.c - p.b * q.d + p.c * q.a + p.d * q.b,
      p.a * q.d + p.b * q.c - p.c * q.b + p.d * q.a,
  };
}

Quaternion q_inv(const Quaternion& q) { return {q.a, -q.b, -q.c, -q.d}; }

CycloReal q_trace(const Quaternion& q) { return q.a.scaled(Rational(2)); }

CycloReal q_norm_sq(const Quaternion& q) {
  return q.a * q.a + q.b * q.b + q.c * q.c + q.d * q.d;
}

Quaternion q_one() { return {CycloReal(1), CycloReal(0), CycloReal(0), CycloReal(0)}; }

const Generators& generators() {
  static const Generators g = [] {
    const CycloReal half_sqrt2 = CycloReal::two_cos(RationalAngle(1, 4)).scaled(Rational(1, 2));
    const CycloReal r = CycloReal::two_cos(RationalAngle(1, 5)).scaled(Rational(1, 2));
    const CycloReal s = CycloReal::two_cos(RationalAngle(2, 5)).scaled(Rational(1, 2));
    const CycloReal half(Rational(1, 2));
    const CycloReal zero(0);
    Generators out;
    out.T = {half_sqrt2, half_sqrt2, zero, zero};
    out.U = {half_sqrt2, zero, half_sqrt2, zero};
    out.A = {r, s, zero, half};
    out.B = {-s, half, zero, -r};
    out.r = r;
    out.s = s;
    return out;
  }();
  return g;
}

namespace {

std::string q_key(const Quaternion& q, std::int64_t conductor) {
  return q.a.embedded(conductor).key() + "#" + q.b.embedded(conductor).key() + "#" +
         q.c.embedded(conductor).key() + "#" + q.d.embedded(conductor).key();
}

}  // namespace

GroupTable group_closure(const std::vector<Quaternion>& gens, std::size_t cap) {
  std::int64_t n = 1;
  for (const auto& g : gens) {
    for (const CycloReal* c : {&g.a, &g.b, &g.c, &g.d}) n = std::lcm(n, c->conductor());
  }
  GroupTable table;
  table.conductor = n;
  std::unordered_set<std::string> seen;
  std::queue<Quaternion> pending;
  const Quaternion one = q_one();
  seen.insert(q_key(one, n));
  table.elements.push_back(one);
  pending.push(one);
  while (!pending.empty()) {
    Quaternion cur = pending.front();
    pending.pop();
    for (const auto& g : gens) {
      Quaternion next = q_mul(cur, g);
      if (seen.insert(q_key(next, n)).second) {
        if (table.elements.size() >= cap) {
          throw std::runtime_error("group_closure: cap " + std::to_string(cap) +
                                   " exceeded; generators do not close");
        }
        table.elements.push_back(next);
        pending.push(next);
      }
    }
  }
  return table;
}

namespace {

class WordParser {
 public:
  explicit WordParser(std::string_view s) : s_(s) {}

  Quaternion parse() {
    Quaternion q = parse_sequence();
    skip_ws();
    if (pos_ != s_.size()) fail("trailing input");
    return q;
  }

 private:
  Quaternion parse_sequence() {
    Quaternion acc = q_one();
    while (true) {
      skip_ws();
      if (pos_ >= s_.size() || s_[pos_] == ')') return acc;
      acc = q_mul(acc, parse_factor());
    }
  }

  Quaternion parse_factor() {
    Quaternion base;
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      base = parse_sequence();
      skip_ws();
      if (pos_ >= s_.size() || s_[pos_] != ')') fail("missing ')'");
      ++pos_;
    } else {
      const auto& g = generators();
      switch (c) {
        case 'A': base = g.A; break;
        case 'B': base = g.B; break;
        case 'T': base = g.T; break;
        case 'U': base = g.U; break;
        default: fail("unexpected character");
      }
      ++pos_;
    }
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == '^') {
      ++pos_;
      base = q_pow(base, parse_exponent());
    }
    return base;
  }

  long parse_exponent() {
    skip_ws();
    bool neg = false;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
      neg = s_[pos_] == '-';
      ++pos_;
    }
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
      fail("expected exponent digits");
    long v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + (s_[pos_] - '0');
      ++pos_;
    }
    return neg ? -v : v;
  }

  static Quaternion q_pow(Quaternion base, long e) {
    if (e < 0) {
      base = q_inv(base);
      e = -e;
    }
    Quaternion acc = q_one();
    for (long i = 0; i < e; ++i) acc = q_mul(acc, base);
    return acc;
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const char* msg) {
    throw std::invalid_argument(std::string("word_eval: ") + msg + " at offset " +
                                std::to_string(pos_) + " in \"" + std::string(s_) + "\"");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Quaternion word_eval(std::string_view word) { return WordParser(word).parse(); }

ExactPoint rep_triple(const Quaternion& g, const Quaternion& h) {
  return {q_trace(g), q_trace(h), q_trace(q_mul(g, h))};
}

const std::vector<Table1Row>& table1_rows() {
  static const std::vector<Table1Row> rows = [] {
    const CycloReal one(1);
    const CycloReal sqrt2 = CycloReal::two_cos(RationalAngle(1, 4));
    const CycloReal two_r = CycloReal::two_cos(RationalAngle(1, 5));   // (1+sqrt5)/2
    const CycloReal two_s = CycloReal::two_cos(RationalAngle(2, 5));   // (sqrt5-1)/2
    const CycloReal k_gold = two_r;    // (1+sqrt5)/2
    const CycloReal k_conj = -two_s;   // (1-sqrt5)/2
    return std::vector<Table1Row>{
        {"T", "(TU)^-1", {sqrt2, one, sqrt2}, one},
        {"A^3B^8", "(AABA)^-1", {one, one, one}, CycloReal(0)},
        {"B^-1", "AAB", {-two_s, two_s, two_s}, k_conj},
        {"ABA^3B^2", "B", {-two_s, -two_s, one}, k_conj},
        {"A^-1", "ABB", {two_r, -two_r, -two_r}, k_gold},
        {"ABAAB^6", "AABA", {two_r, one, two_r}, k_gold},
        {"ABAA", "A", {one, two_r, one}, one},
        {"AB^-6", "B^-6", {one, two_s, -one}, one},
        {"ABAA", "A^-1", {one, two_r, two_s}, one},
    };
  }();
  return rows;
}

const std::vector<ExactPoint>& table1_canonical_classes() {
  static const std::vector<ExactPoint> classes = [] {
    std::vector<ExactPoint> out;
    for (const auto& row : table1_rows()) {
      ExactPoint c = s_canonical(row.triple, true);
      if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
    }
    return out;
  }();
  return classes;
}

Table1Report verify_table1() {
  Table1Report report;
  report.all_pass = true;
  for (const auto& row : table1_rows()) {
    const Quaternion gx = word_eval(row.x_word);
    const Quaternion gy = word_eval(row.y_word);
    const ExactPoint t = rep_triple(gx, gy);
    Table1Report::Row r;
    r.x_word = row.x_word;
    r.y_word = row.y_word;
    r.computed = t;
    r.triple_matches = s_canonical(t, true) == s_canonical(row.triple, true);
    r.k_matches = boundary_trace(t) == row.k;
    report.all_pass = report.all_pass && r.triple_matches && r.k_matches;
    report.rows.push_back(std::move(r));
  }
  return report;
}

std::vector<ExactPoint> enumerate_rep_classes(const GroupTable& table) {
  const std::int64_t n = table.conductor;
  auto point_key = [n](const ExactPoint& p) {
    return p.x.embedded(n).key() + "#" + p.y.embedded(n).key() + "#" + p.z.embedded(n).key();
  };
  std::unordered_set<std::string> raw_seen;
  std::unordered_set<std::string> canonical_seen;
  std::vector<ExactPoint> out;
  for (const auto& g : table.elements) {
    for (const auto& h : table.elements) {
      ExactPoint t = rep_triple(g, h);
      if (!raw_seen.insert(point_key(t)).second) continue;
      ExactPoint c = s_canonical(t, true);
      if (canonical_seen.insert(point_key(c)).second) out.push_back(std::move(c));
    }
  }
  return out;
}

}  // namespace charvar
