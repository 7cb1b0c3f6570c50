#include "run_config.hpp"

#include <cmath>
#include <fstream>
#include <numbers>

#include "ifcrack/error.hpp"

namespace ifcrack::cli {

namespace {

using nlohmann::json;

constexpr double kDeg = std::numbers::pi / 180.0;

[[noreturn]] void config_error(const std::string& field, const std::string& what) {
  raise(ErrorKind::Config, field + ": " + what);
}

void check_object(const json& j, const std::string& field,
                  std::initializer_list<const char*> allowed) {
  if (!j.is_object()) config_error(field, "expected an object");
  for (const auto& [key, value] : j.items()) {
    bool known = false;
    for (const char* name : allowed) known = known || key == name;
    if (!known) config_error(field + "." + key, "unknown field");
  }
}

bool read_number(const json& obj, const char* key, const std::string& prefix, double& out) {
  if (!obj.contains(key)) return false;
  const json& v = obj.at(key);
  if (!v.is_number()) config_error(prefix + "." + key, "expected a number");
  out = v.get<double>();
  if (!std::isfinite(out)) config_error(prefix + "." + key, "must be finite");
  return true;
}

void require(bool ok, const std::string& field, const std::string& what) {
  if (!ok) config_error(field, what);
}

void parse_material(const json& m, RunConfig& cfg) {
  check_object(m, "material", {"mu1", "mu2", "kappa", "mu_star", "kappa_star"});
  double mu1 = cfg.material.mu1, mu2 = cfg.material.mu2, kappa = cfg.material.kappa;
  const bool raw = read_number(m, "mu1", "material", mu1) |
                   read_number(m, "mu2", "material", mu2) |
                   read_number(m, "kappa", "material", kappa);
  double mu_star = 0.0, kappa_star = 0.0;
  const bool has_ms = read_number(m, "mu_star", "material", mu_star);
  const bool has_ks = read_number(m, "kappa_star", "material", kappa_star);
  if (raw && (has_ms || has_ks)) {
    config_error("material", "give either mu1/mu2/kappa or mu_star/kappa_star, not both");
  }
  if (has_ms || has_ks) {
    const auto current = cfg.derived();
    if (!has_ms) mu_star = current.mu_star;
    if (!has_ks) kappa_star = current.kappa_star;
    require(mu_star > -1.0 && mu_star < 1.0, "material.mu_star", "must lie in (-1, 1)");
    require(kappa_star > 0.0, "material.kappa_star", "must be positive");
    cfg.material = material_from_dimensionless(mu_star, kappa_star, cfg.load.reference_length());
    return;
  }
  require(mu1 > 0.0, "material.mu1", "must be positive");
  require(mu2 > 0.0, "material.mu2", "must be positive");
  require(kappa > 0.0, "material.kappa", "must be positive");
  cfg.material = {mu1, mu2, kappa};
}

void parse_load(const json& l, RunConfig& cfg) {
  check_object(l, "load", {"kind", "F", "a", "b"});
  if (l.contains("kind")) {
    const json& k = l.at("kind");
    require(k.is_string(), "load.kind", "expected \"point\" or \"smooth\"");
    const auto s = k.get<std::string>();
    if (s == "point") {
      cfg.load.kind = LoadKind::PointTriple;
    } else if (s == "smooth") {
      cfg.load.kind = LoadKind::SmoothExponential;
    } else {
      config_error("load.kind", "expected \"point\" or \"smooth\", got \"" + s + "\"");
    }
  }
  read_number(l, "F", "load", cfg.load.F);
  const bool has_a = read_number(l, "a", "load", cfg.load.a);
  const bool has_b = read_number(l, "b", "load", cfg.load.b);
  if (cfg.load.kind == LoadKind::PointTriple) {
    require(cfg.load.a > 0.0, "load.a", "must be positive");
    require(cfg.load.b > 0.0 && cfg.load.b < cfg.load.a, "load.b", "must satisfy 0 < b < a");
  } else {
    require(!has_a && !has_b, "load", "a and b apply to point loads only");
  }
}

void parse_inclusion(const json& in, RunConfig& cfg) {
  check_object(in, "inclusion",
               {"d", "phi_deg", "alpha_deg", "ell_a", "ell_b", "nu_star", "rigid", "min_angle_deg"});
  auto& inc = cfg.inclusion;
  read_number(in, "d", "inclusion", inc.d);
  double deg = 0.0;
  if (read_number(in, "phi_deg", "inclusion", deg)) inc.phi = deg * kDeg;
  if (read_number(in, "alpha_deg", "inclusion", deg)) inc.alpha = deg * kDeg;
  read_number(in, "ell_a", "inclusion", inc.ell_a);
  read_number(in, "ell_b", "inclusion", inc.ell_b);
  read_number(in, "nu_star", "inclusion", inc.nu_star);
  if (in.contains("rigid")) {
    require(in.at("rigid").is_boolean(), "inclusion.rigid", "expected true or false");
    inc.rigid = in.at("rigid").get<bool>();
  }
  if (read_number(in, "min_angle_deg", "inclusion", deg)) cfg.min_angle = deg * kDeg;
  require(inc.d > 0.0, "inclusion.d", "must be positive");
  require(inc.ell_a > 0.0, "inclusion.ell_a", "must be positive");
  require(inc.ell_b > 0.0 && inc.ell_b <= inc.ell_a, "inclusion.ell_b",
          "must satisfy 0 < ell_b <= ell_a");
  require(inc.ell_a < inc.d, "inclusion.ell_a", "must be smaller than d");
  require(inc.nu_star > 0.0, "inclusion.nu_star", "must be positive");
  require(cfg.min_angle >= 0.0 && cfg.min_angle < std::numbers::pi / 2.0,
          "inclusion.min_angle_deg", "must lie in [0, 90)");
}

void parse_numerics(const json& n, RunConfig& cfg) {
  check_object(n, "numerics", {"rel_tol", "abs_tol", "max_subdivisions", "truncation_radius"});
  auto& s = cfg.numerics;
  read_number(n, "rel_tol", "numerics", s.rel_tol);
  read_number(n, "abs_tol", "numerics", s.abs_tol);
  read_number(n, "truncation_radius", "numerics", s.truncation_radius);
  if (n.contains("max_subdivisions")) {
    require(n.at("max_subdivisions").is_number_integer(), "numerics.max_subdivisions",
            "expected an integer");
    s.max_subdivisions = n.at("max_subdivisions").get<int>();
  }
  require(s.rel_tol > 0.0, "numerics.rel_tol", "must be positive");
  require(s.abs_tol >= 0.0, "numerics.abs_tol", "must be non-negative");
  require(s.max_subdivisions >= 1, "numerics.max_subdivisions", "must be at least 1");
  require(s.truncation_radius >= 0.0, "numerics.truncation_radius",
          "must be positive (0 selects the default)");
}

void parse_ratio(const json& r, RunConfig& cfg) {
  check_object(r, "ratio", {"mu_star_1", "mu_star_2"});
  read_number(r, "mu_star_1", "ratio", cfg.ratio.mu_star_1);
  read_number(r, "mu_star_2", "ratio", cfg.ratio.mu_star_2);
  for (const auto& [name, v] :
       {std::pair{"ratio.mu_star_1", cfg.ratio.mu_star_1}, {"ratio.mu_star_2", cfg.ratio.mu_star_2}}) {
    require(v > -1.0 && v < 1.0, name, "must lie in (-1, 1)");
  }
}

}  // namespace

CrackLoad LoadConfig::build() const {
  return kind == LoadKind::PointTriple ? CrackLoad::point_triple(F, a, b)
                                       : CrackLoad::smooth_exponential(F);
}

double LoadConfig::reference_length() const { return kind == LoadKind::PointTriple ? a : 1.0; }

json RunConfig::to_json() const {
  const auto p = derived();
  json load_j = {{"kind", to_string(load.kind)}, {"F", load.F}};
  if (load.kind == LoadKind::PointTriple) {
    load_j["a"] = load.a;
    load_j["b"] = load.b;
  }
  return {
      {"material", {{"mu1", material.mu1}, {"mu2", material.mu2}, {"kappa", material.kappa}}},
      {"derived",
       {{"mu0", p.mu0},
        {"mu_star", p.mu_star},
        {"kappa_star", p.kappa_star},
        {"reference_length", load.reference_length()}}},
      {"load", load_j},
      {"inclusion",
       {{"d", inclusion.d},
        {"phi_deg", inclusion.phi / kDeg},
        {"alpha_deg", inclusion.alpha / kDeg},
        {"ell_a", inclusion.ell_a},
        {"ell_b", inclusion.ell_b},
        {"nu_star", inclusion.nu_star},
        {"rigid", inclusion.rigid},
        {"min_angle_deg", min_angle / kDeg}}},
      {"ratio", {{"mu_star_1", ratio.mu_star_1}, {"mu_star_2", ratio.mu_star_2}}},
      {"numerics",
       {{"rel_tol", numerics.rel_tol},
        {"abs_tol", numerics.abs_tol},
        {"max_subdivisions", numerics.max_subdivisions},
        {"truncation_radius", numerics.truncation_radius}}},
  };
}

RunConfig default_config(std::string_view command) {
  RunConfig cfg;
  if (command == "map") cfg.load.kind = LoadKind::SmoothExponential;
  cfg.material = material_from_dimensionless(0.0, 1.0, cfg.load.reference_length());
  return cfg;
}

RunConfig parse_config(const json& j, std::string_view command) {
  RunConfig cfg = default_config(command);
  // "derived" is output-only; accepting it lets an echoed config be rerun.
  check_object(j, "config", {"material", "load", "inclusion", "numerics", "ratio", "derived"});
  // The load fixes the reference length used by a dimensionless material.
  if (j.contains("load")) parse_load(j.at("load"), cfg);
  if (j.contains("material")) {
    parse_material(j.at("material"), cfg);
  } else {
    cfg.material = material_from_dimensionless(0.0, 1.0, cfg.load.reference_length());
  }
  if (j.contains("inclusion")) parse_inclusion(j.at("inclusion"), cfg);
  if (j.contains("numerics")) parse_numerics(j.at("numerics"), cfg);
  if (j.contains("ratio")) parse_ratio(j.at("ratio"), cfg);
  return cfg;
}

RunConfig load_config_file(const std::string& path, std::string_view command) {
  std::ifstream in(path);
  if (!in) config_error("--config", "cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    config_error("--config", std::string("invalid JSON: ") + e.what());
  }
  return parse_config(j, command);
}

}  // namespace ifcrack::cli
