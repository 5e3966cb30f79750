// charvar: classification, orbit dumps, verification suites, density
// experiments, and data/figure export for the one-holed-torus trace action.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "charvar/character_variety.hpp"
#include "charvar/cyclo.hpp"
#include "charvar/diophantine.hpp"
#include "charvar/orbit.hpp"
#include "charvar/quaternion.hpp"

using json = nlohmann::ordered_json;
using namespace charvar;

namespace {

constexpr int kSchemaVersion = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInconclusive = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Point literals: "1,1,1", "1/2,1/2,1/2", "0,0,1.2",
// "2cos(1/5 pi), 1, 2cos(1/5 pi)". Decimal components select float mode;
// rationals and cosine literals are exact.

struct ParsedPoint {
  bool exact;
  ExactPoint exact_point;  // valid when exact
  FloatPoint float_point;  // always valid
};

std::string trimmed(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

std::optional<RationalAngle> parse_angle_fraction(const std::string& body) {
  // "p/q pi", "p/q*pi", "1 pi", "pi/q"
  std::string t = trimmed(body);
  long long num = 1, den = 1;
  std::size_t pos = 0;
  auto read_int = [&](long long& out) -> bool {
    std::size_t start = pos;
    if (pos < t.size() && (t[pos] == '-' || t[pos] == '+')) ++pos;
    while (pos < t.size() && std::isdigit(static_cast<unsigned char>(t[pos]))) ++pos;
    if (pos == start || (pos == start + 1 && !std::isdigit(static_cast<unsigned char>(t[start]))))
      return false;
    out = std::stoll(t.substr(start, pos - start));
    return true;
  };
  auto skip_ws = [&] { while (pos < t.size() && t[pos] == ' ') ++pos; };
  auto accept = [&](const char* lit) -> bool {
    std::size_t n = std::string_view(lit).size();
    if (t.compare(pos, n, lit) == 0) { pos += n; return true; }
    return false;
  };

  skip_ws();
  bool have_num = read_int(num);
  skip_ws();
  if (!have_num) {
    num = 1;
    if (!accept("pi")) return std::nullopt;
  } else {
    if (accept("/")) {
      skip_ws();
      if (!read_int(den)) return std::nullopt;
      skip_ws();
    }
    accept("*");
    skip_ws();
    if (!accept("pi")) return std::nullopt;
  }
  skip_ws();
  if (accept("/")) {
    skip_ws();
    long long d2 = 0;
    if (!read_int(d2)) return std::nullopt;
    den *= d2;
    skip_ws();
  }
  if (pos != t.size() || den == 0) return std::nullopt;
  return RationalAngle(num, den);
}

struct Component {
  bool exact;
  CycloReal value;   // when exact
  double approx;
};

Component parse_component(const std::string& raw) {
  const std::string s = trimmed(raw);
  if (s.empty()) throw UsageError("empty point component");

  if (s.rfind("2cos(", 0) == 0 || s.rfind("-2cos(", 0) == 0) {
    const bool neg = s[0] == '-';
    const std::size_t open = s.find('(');
    const std::size_t close = s.rfind(')');
    if (close == std::string::npos || close != s.size() - 1)
      throw UsageError("bad cosine literal: " + s);
    const auto angle = parse_angle_fraction(s.substr(open + 1, close - open - 1));
    if (!angle) throw UsageError("bad angle in cosine literal: " + s);
    CycloReal v = CycloReal::two_cos(*angle);
    if (neg) v = -v;
    return {true, v, v.to_float()};
  }

  if (s.find('.') == std::string::npos && s.find('e') == std::string::npos &&
      s.find('E') == std::string::npos) {
    try {
      Rational r(s);
      r.canonicalize();
      CycloReal v(r);
      return {true, v, v.to_float()};
    } catch (const std::invalid_argument&) {
      throw UsageError("bad point component: " + s);
    }
  }

  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size()) throw UsageError("bad point component: " + s);
    return {false, CycloReal(0), v};
  } catch (const std::exception&) {
    throw UsageError("bad point component: " + s);
  }
}

ParsedPoint parse_point(const std::string& literal) {
  std::vector<std::string> parts;
  std::stringstream ss(literal);
  std::string item;
  while (std::getline(ss, item, ',')) parts.push_back(item);
  if (parts.size() != 3) throw UsageError("expected three comma-separated components");
  const Component cx = parse_component(parts[0]);
  const Component cy = parse_component(parts[1]);
  const Component cz = parse_component(parts[2]);
  ParsedPoint out;
  out.exact = cx.exact && cy.exact && cz.exact;
  out.float_point = {cx.approx, cy.approx, cz.approx};
  if (out.exact) out.exact_point = {cx.value, cy.value, cz.value};
  return out;
}

// ---------------------------------------------------------------------------
// Rendering

std::string render_exact(const CycloReal& v) {
  if (v.is_rational()) return v.rational_value().get_str();
  if (const auto a = v.as_two_cos())
    return "2cos(" + std::to_string(a->num) + "/" + std::to_string(a->den) + " pi)";
  std::ostringstream os;
  os.precision(17);
  os << v.to_float();
  return os.str();
}

json point_json(const ExactPoint& p) {
  return json{{"x", render_exact(p.x)}, {"y", render_exact(p.y)}, {"z", render_exact(p.z)},
              {"x_float", p.x.to_float()}, {"y_float", p.y.to_float()},
              {"z_float", p.z.to_float()}};
}

void write_atomic(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp + " for writing");
    out << content;
  }
  std::filesystem::rename(tmp, path);
}

void emit(const std::string& content, const std::string& out_path) {
  if (out_path.empty())
    std::cout << content;
  else
    write_atomic(out_path, content);
}

// ---------------------------------------------------------------------------
// Commands

json classification_json(const Classification& c) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["verdict"] = verdict_name(c.verdict);
  j["k"] = c.k;
  if (c.k_exact) j["k_exact"] = render_exact(*c.k_exact);
  if (c.orbit_size) j["orbit_size"] = *c.orbit_size;
  if (c.table1_class) j["table1_class"] = point_json(*c.table1_class);
  if (c.witness) j["witness"] = point_json(*c.witness);
  if (!c.notes.empty()) j["notes"] = c.notes;
  return j;
}

int cmd_classify(const std::string& literal, int max_den, double tol, std::size_t cap,
                 const std::string& out_path) {
  const ParsedPoint p = parse_point(literal);
  const Classification c =
      p.exact ? classify(p.exact_point, cap) : classify(p.float_point, max_den, tol, cap);
  emit(classification_json(c).dump(2) + "\n", out_path);
  return 0;
}

int cmd_orbit(const std::string& literal, std::size_t cap, const std::string& format,
              const std::string& out_path) {
  const ParsedPoint p = parse_point(literal);
  if (!p.exact) throw UsageError("orbit requires an exact point literal");
  const OrbitReport r = exact_orbit(p.exact_point, cap);
  if (r.inconclusive)
    throw InconclusiveOrbit("orbit cap " + std::to_string(cap) + " hit without closure");

  std::ostringstream os;
  if (format == "csv") {
    os << "x,y,z,k,exact_x,exact_y,exact_z\n";
    os.precision(17);
    for (const ExactPoint& q : r.points) {
      os << q.x.to_float() << ',' << q.y.to_float() << ',' << q.z.to_float() << ','
         << boundary_trace(q).to_float() << ',' << render_exact(q.x) << ',' << render_exact(q.y)
         << ',' << render_exact(q.z) << '\n';
    }
  } else if (format == "json") {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["closed"] = r.closed;
    j["size"] = r.points.size();
    if (r.witness) j["witness"] = point_json(*r.witness);
    j["points"] = json::array();
    for (const ExactPoint& q : r.points) j["points"].push_back(point_json(q));
    os << j.dump(2) << '\n';
  } else {
    throw UsageError("format must be csv or json");
  }
  emit(os.str(), out_path);
  return 0;
}

int cmd_verify_table1() {
  const Table1Report report = verify_table1();
  for (const auto& row : report.rows) {
    std::cout << "table1 " << row.x_word << " | " << row.y_word << " -> ("
              << render_exact(row.computed.x) << ", " << render_exact(row.computed.y) << ", "
              << render_exact(row.computed.z) << ") "
              << (row.triple_matches && row.k_matches ? "pass" : "FAIL") << '\n';
  }
  std::cout << (report.all_pass ? "table1: all rows pass" : "table1: FAILURES") << '\n';
  return report.all_pass ? 0 : 1;
}

int cmd_verify_cj(int max_den) {
  const CjReport report = verify_cj_lists();
  for (const auto& line : report.lines)
    std::cout << "cj " << line.name << ": " << (line.pass ? "pass" : "FAIL") << '\n';

  bool extras = false;
  if (max_den > 0) {
    const auto found = search_vanishing(max_den);
    for (const auto& combo : found) {
      const CjMatchResult m = match_cj(combo);
      if (!m.id && !m.degenerate) {
        extras = true;
        std::cout << "cj search: unmatched vanishing combination with " << combo.terms.size()
                  << " terms\n";
      }
    }
    std::cout << "cj search max_den=" << max_den << ": " << found.size()
              << " minimal vanishing combinations, " << (extras ? "unmatched extras" : "all matched")
              << '\n';
  }
  const bool ok = report.all_pass && !extras;
  std::cout << (ok ? "cj: pass" : "cj: FAILURES") << '\n';
  return ok ? 0 : 1;
}

int cmd_verify_pin() {
  bool ok = true;
  for (double k : {-1.5, -0.5, 0.0, 0.5, 1.0, 1.9}) {
    for (const FloatPoint& p : pin_points(k)) {
      const double kk = boundary_trace(p);
      const bool this_ok = std::abs(kk - k) < 1e-9 && classify_pin(p) == PinClass::Pin2;
      ok = ok && this_ok;
      if (!this_ok)
        std::cout << "pin FAIL at k=" << k << " point (" << p.x << "," << p.y << "," << p.z
                  << ")\n";
    }
  }
  std::cout << (ok ? "pin: all fixed points verified" : "pin: FAILURES") << '\n';
  return ok ? 0 : 1;
}

int cmd_verify_filtration(int n, int max_den) {
  const auto values = filtration_Y(n, max_den);
  std::cout << "Y_" << n << " = {";
  for (std::size_t i = 0; i < values.size(); ++i)
    std::cout << (i ? ", " : "") << render_exact(values[i]);
  std::cout << "}\n";
  if (n == 3) {
    const bool ok = values.size() == 1 && values[0] == CycloReal(-1);
    std::cout << (ok ? "filtration: pass" : "filtration: FAIL") << '\n';
    return ok ? 0 : 1;
  }
  if (n == 4) {
    const bool ok = values.size() == 2 && values[0] == CycloReal(-1) && values[1] == CycloReal(0);
    std::cout << (ok ? "filtration: pass" : "filtration: FAIL") << '\n';
    return ok ? 0 : 1;
  }
  return 0;
}

int cmd_density(const std::string& literal, std::size_t steps, double epsilon, std::size_t grid,
                std::uint64_t seed, const std::string& policy_name, int x_period, int y_period,
                const std::string& out_path) {
  const ParsedPoint p = parse_point(literal);
  WordPolicy policy;
  if (policy_name == "alternate") {
    policy.kind = WordPolicy::Kind::Alternate;
    policy.x_period = x_period;
    policy.y_period = y_period;
  } else if (policy_name != "random") {
    throw UsageError("policy must be random or alternate");
  }
  const FloatOrbitResult orbit = float_orbit(p.float_point, steps, policy, seed);
  if (orbit.aborted)
    throw InconclusiveOrbit("float orbit aborted: boundary-trace drift " +
                            std::to_string(orbit.max_drift));
  const double k = boundary_trace(p.float_point);
  const DensityResult d = epsilon_density(orbit.points, k, epsilon, grid);
  json j;
  j["schema_version"] = kSchemaVersion;
  j["k"] = k;
  j["steps"] = orbit.points.size() - 1;
  j["seed"] = seed;
  j["epsilon"] = d.epsilon;
  j["grid_size"] = d.grid_size;
  j["covered_fraction"] = d.covered_fraction;
  j["max_gap"] = d.max_gap;
  j["max_drift"] = orbit.max_drift;
  emit(j.dump(2) + "\n", out_path);
  return 0;
}

std::string sphere_svg(double k, std::size_t levels_n) {
  // Orthographic view of the level ellipses E_{x,k}: isometric-style projection
  // u = (z - y) cos(30 deg), v = -x + (y + z) sin(30 deg).
  constexpr double kScale = 90.0, kCx = 260.0, kCy = 260.0;
  auto project = [&](const FloatPoint& p) {
    const double u = (p.z - p.y) * 0.8660254037844386;
    const double v = -p.x + (p.y + p.z) * 0.5;
    return std::pair<double, double>{kCx + kScale * u, kCy + kScale * v};
  };
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"520\" height=\"520\" "
        "viewBox=\"0 0 520 520\">\n"
     << "<rect width=\"520\" height=\"520\" fill=\"white\"/>\n";
  const double x_max = std::sqrt(2.0 + k);
  for (std::size_t j = 0; j < levels_n; ++j) {
    const double x =
        x_max * ((2.0 * static_cast<double>(j) + 1.0) / static_cast<double>(levels_n) - 1.0);
    const double r = std::sqrt(std::max(0.0, 2.0 + k - x * x));
    os << "<polyline fill=\"none\" stroke=\"#234\" stroke-width=\"1\" points=\"";
    constexpr int kSegments = 96;
    for (int i = 0; i <= kSegments; ++i) {
      const double a = 2.0 * std::numbers::pi * i / kSegments;
      const auto [u, v] = project(from_tilde({x, r * std::cos(a), r * std::sin(a)}));
      os << u << ',' << v << ' ';
    }
    os << "\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

int cmd_sphere(double k, std::size_t n, const std::string& svg_path, const std::string& csv_path) {
  if (!svg_path.empty()) {
    write_atomic(svg_path, sphere_svg(k, std::max<std::size_t>(3, static_cast<std::size_t>(
                                             std::sqrt(static_cast<double>(n))))));
    return 0;
  }
  std::ostringstream os;
  os << "x,y,z,k\n";
  os.precision(17);
  for (const FloatPoint& p : sphere_grid(k, n))
    os << p.x << ',' << p.y << ',' << p.z << ',' << boundary_trace(p) << '\n';
  emit(os.str(), csv_path);
  return 0;
}

json combination_json(const CosineCombination& c) {
  json terms = json::array();
  for (const CosineTerm& t : c.terms) {
    terms.push_back(json{{"coeff", t.coeff.get_str()},
                         {"angle", std::to_string(t.angle.num) + "/" + std::to_string(t.angle.den) +
                                       " pi"}});
  }
  const CjMatchResult m = match_cj(c);
  json j{{"terms", terms}, {"rhs", c.rhs.get_str()}};
  if (m.id) {
    j["matched_equation"] = m.id->equation;
    if (m.id->t)
      j["t"] = std::to_string(m.id->t->num) + "/" + std::to_string(m.id->t->den) + " pi";
  }
  return j;
}

int cmd_cj_search(int max_den, const std::string& out_path) {
  const auto found = search_vanishing(max_den);
  json j;
  j["schema_version"] = kSchemaVersion;
  j["max_den"] = max_den;
  j["combinations"] = json::array();
  for (const auto& c : found) j["combinations"].push_back(combination_json(c));
  emit(j.dump(2) + "\n", out_path);
  return 0;
}

int cmd_pinpoints(double k, const std::string& out_path) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["k"] = k;
  j["points"] = json::array();
  for (const FloatPoint& p : pin_points(k))
    j["points"].push_back(json{{"x", p.x}, {"y", p.y}, {"z", p.z}});
  emit(j.dump(2) + "\n", out_path);
  return 0;
}

int cmd_filtration(int n, int max_den, const std::string& out_path) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["n"] = n;
  j["values"] = json::array();
  for (const CycloReal& y : filtration_Y(n, max_den))
    j["values"].push_back(json{{"value", render_exact(y)}, {"float", y.to_float()}});
  emit(j.dump(2) + "\n", out_path);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact and numeric dynamics on the SU(2) trace coordinates of the one-holed torus"};
  app.require_subcommand(1);

  std::string point, format = "json", out_path, svg_path, csv_path, suite, policy = "random";
  int max_den = 420, cj_max_den = 0, filt_n = 4, filt_den = 64, x_period = 1, y_period = 1;
  double tol = 1e-9, epsilon = 0.05, k = 1.0;
  std::size_t cap = 1'000'000, steps = 100'000, grid = 2000, n = 2000;
  std::uint64_t seed = 1;

  auto* c_classify = app.add_subcommand("classify", "Classify a point of E");
  c_classify->add_option("point", point)->required();
  c_classify->add_option("--max-den", max_den, "Snap denominator bound (float mode)");
  c_classify->add_option("--tol", tol, "Snap tolerance (float mode)");
  c_classify->add_option("--cap", cap, "Exact orbit size cap");
  c_classify->add_option("--out", out_path, "Write JSON to file (atomic)");

  auto* c_orbit = app.add_subcommand("orbit", "Exact orbit closure dump");
  c_orbit->add_option("point", point)->required();
  c_orbit->add_option("--cap", cap);
  c_orbit->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
  c_orbit->add_option("--out", out_path);

  auto* c_verify = app.add_subcommand("verify", "Run a verification suite");
  c_verify->add_option("suite", suite)->required()->check(
      CLI::IsMember({"table1", "cj", "pin", "filtration"}));
  c_verify->add_option("--max-den", cj_max_den, "Also sweep vanishing sums up to this denominator");
  c_verify->add_option("--n", filt_n, "Filtration level");
  c_verify->add_option("--den", filt_den, "Filtration denominator bound");

  auto* c_density = app.add_subcommand("density", "Float orbit + epsilon-density experiment");
  c_density->add_option("point", point)->required();
  c_density->add_option("--steps", steps);
  c_density->add_option("--epsilon", epsilon);
  c_density->add_option("--grid", grid);
  c_density->add_option("--seed", seed);
  c_density->add_option("--policy", policy)->check(CLI::IsMember({"random", "alternate"}));
  c_density->add_option("--x-period", x_period);
  c_density->add_option("--y-period", y_period);
  c_density->add_option("--out", out_path);

  auto* c_sphere = app.add_subcommand("sphere", "Sample or draw the sphere E_k");
  c_sphere->add_option("--k", k)->required();
  c_sphere->add_option("--n", n);
  c_sphere->add_option("--svg", svg_path, "Write the level-ellipse figure");
  c_sphere->add_option("--csv", csv_path, "Write the point cloud");

  auto* c_cj = app.add_subcommand("cj-search", "Sweep minimal vanishing cosine sums");
  c_cj->add_option("--max-den", max_den)->required();
  c_cj->add_option("--out", out_path);

  auto* c_pin = app.add_subcommand("pinpoints", "The six rotation-fixed points of E_k");
  c_pin->add_option("--k", k)->required();
  c_pin->add_option("--out", out_path);

  auto* c_filt = app.add_subcommand("filtration", "The filtration level Y_n");
  c_filt->add_option("--n", filt_n)->required();
  c_filt->add_option("--den", filt_den);
  c_filt->add_option("--out", out_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (c_classify->parsed()) return cmd_classify(point, max_den, tol, cap, out_path);
    if (c_orbit->parsed()) return cmd_orbit(point, cap, format, out_path);
    if (c_verify->parsed()) {
      if (suite == "table1") return cmd_verify_table1();
      if (suite == "cj") return cmd_verify_cj(cj_max_den);
      if (suite == "pin") return cmd_verify_pin();
      return cmd_verify_filtration(filt_n, filt_den);
    }
    if (c_density->parsed())
      return cmd_density(point, steps, epsilon, grid, seed, policy, x_period, y_period, out_path);
    if (c_sphere->parsed()) return cmd_sphere(k, n, svg_path, csv_path);
    if (c_cj->parsed()) return cmd_cj_search(max_den, out_path);
    if (c_pin->parsed()) return cmd_pinpoints(k, out_path);
    if (c_filt->parsed()) return cmd_filtration(filt_n, filt_den, out_path);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InconclusiveOrbit& e) {
    std::cerr << "inconclusive: " << e.what() << '\n';
    return kExitInconclusive;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
