#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>

#include "ifcrack/error.hpp"
#include "ifcrack/perturbation.hpp"
#include "ifcrack/weightfn.hpp"

namespace ifcrack::cli {

namespace {

using nlohmann::json;

constexpr double kDeg = std::numbers::pi / 180.0;

json meta_for(const std::string& command, const RunConfig& cfg) {
  return {{"command", command}, {"config", cfg.to_json()}};
}

std::string csv_cell(const json& v) {
  if (v.is_number()) return format_number(v.get<double>());
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

// Upper-half-plane polar angles kept clear of the interface by the guard.
std::vector<double> phi_grid(const RunConfig& cfg, int steps) {
  if (steps == 1) return {cfg.inclusion.phi};
  const double lo = std::max(5.0 * kDeg, cfg.min_angle);
  const double hi = std::numbers::pi - lo;
  std::vector<double> g(steps);
  for (int i = 0; i < steps; ++i) g[i] = lo + (hi - lo) * i / (steps - 1);
  return g;
}

std::vector<double> alpha_grid(const RunConfig& cfg, int steps) {
  if (steps == 1) return {cfg.inclusion.alpha};
  std::vector<double> g(steps);
  for (int i = 0; i < steps; ++i) g[i] = std::numbers::pi * i / steps;
  return g;
}

}  // namespace

std::string format_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

void Range::validate(const std::string& field) const {
  if (points < 1) raise(ErrorKind::Config, field + ": --points must be at least 1");
  if (!std::isfinite(from) || !std::isfinite(to)) {
    raise(ErrorKind::Config, field + ": --from and --to must be finite");
  }
  if (points > 1 && !(from < to)) raise(ErrorKind::Config, field + ": need --from < --to");
  if (log && !(from > 0.0)) raise(ErrorKind::Config, field + ": --log needs --from > 0");
}

std::vector<double> Range::grid() const {
  std::vector<double> g(points);
  if (points == 1) {
    g[0] = from;
    return g;
  }
  for (int i = 0; i < points; ++i) {
    const double t = static_cast<double>(i) / (points - 1);
    g[i] = log ? std::exp(std::log(from) + t * (std::log(to) - std::log(from)))
               : from + t * (to - from);
  }
  g.back() = to;
  return g;
}

json Range::to_json() const {
  return {{"from", from}, {"to", to}, {"points", points}, {"log", log}};
}

Range default_range(const std::string& axis) {
  if (axis == "mu_star") return {-0.99, 0.99, 23, false};
  return {1e-4, 1e4, 9, true};
}

void Table::write(std::ostream& out, Format format) const {
  if (format == Format::Json) {
    json doc = meta;
    doc["columns"] = columns;
    json rows_j = json::array();
    for (const auto& row : rows) {
      json r = json::object();
      for (std::size_t c = 0; c < columns.size(); ++c) r[columns[c]] = row[c];
      rows_j.push_back(r);
    }
    doc["rows"] = rows_j;
    out << doc.dump(2) << '\n';
    return;
  }
  out << "# " << meta.dump() << '\n';
  for (std::size_t c = 0; c < columns.size(); ++c) out << (c ? "," : "") << columns[c];
  out << '\n';
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << csv_cell(row[c]);
    out << '\n';
  }
}

void cmd_sigma0(const RunConfig& cfg, Format format, std::ostream& out) {
  const auto p = cfg.derived();
  const auto r = sigma0(cfg.load.build(), cfg.material, cfg.numerics);
  json doc = meta_for("sigma0", cfg);
  const std::vector<std::pair<std::string, double>> values = {
      {"sigma0", r.sigma0}, {"est_error", r.est_error}, {"imag_part", r.imag_part},
      {"mu0", p.mu0},       {"mu_star", p.mu_star},     {"kappa_star", p.kappa_star}};
  if (format == Format::Json) {
    for (const auto& [key, value] : values) doc[key] = value;
    out << doc.dump(2) << '\n';
    return;
  }
  Table t{doc, {}, {{}}};
  for (const auto& [key, value] : values) {
    t.columns.push_back(key);
    t.rows[0].push_back(value);
  }
  t.write(out, Format::Csv);
}

Table cmd_sweep(const RunConfig& cfg, const std::string& axis, const Range& range) {
  if (axis != "kappa_star" && axis != "mu_star") {
    raise(ErrorKind::Config, "--axis: expected kappa_star or mu_star, got " + axis);
  }
  range.validate("sweep");
  if (axis == "mu_star" && !(range.from > -1.0 && range.to < 1.0)) {
    raise(ErrorKind::Config, "sweep: mu_star range must lie in (-1, 1)");
  }
  if (axis == "kappa_star" && !(range.from > 0.0)) {
    raise(ErrorKind::Config, "sweep: kappa_star range must be positive");
  }
  const auto base = cfg.derived();
  const double a = cfg.load.reference_length();
  const CrackLoad load = cfg.load.build();
  Table t{meta_for("sweep", cfg), {"kappa_star", "mu_star", "mu0", "sigma0", "est_error"}, {}};
  t.meta["axis"] = axis;
  t.meta["range"] = range.to_json();
  for (double v : range.grid()) {
    const double ks = axis == "kappa_star" ? v : base.kappa_star;
    const double ms = axis == "mu_star" ? v : base.mu_star;
    const Bimaterial m = material_from_dimensionless(ms, ks, a);
    const auto r = sigma0(load, m, cfg.numerics);
    t.rows.push_back({ks, ms, derive_params(m, a).mu0, r.sigma0, r.est_error});
  }
  return t;
}

Table cmd_ratio(const RunConfig& cfg, const Range& range) {
  range.validate("ratio");
  if (!(range.from > 0.0)) raise(ErrorKind::Config, "ratio: kappa_star range must be positive");
  const CrackLoad load = cfg.load.build();
  const double a = cfg.load.reference_length();
  Table t{meta_for("ratio", cfg),
          {"kappa_star", "r", "r_normalized", "sigma0_1", "sigma0_2", "k3_1", "k3_2"},
          {}};
  t.meta["range"] = range.to_json();
  for (double ks : range.grid()) {
    const auto r = ratio_r(ks, cfg.ratio.mu_star_1, cfg.ratio.mu_star_2, load, a, cfg.numerics);
    t.rows.push_back({ks, r.r, r.r_normalized, r.sigma0_1, r.sigma0_2, r.k3_1, r.k3_2});
  }
  return t;
}

Table cmd_map(const RunConfig& cfg, const MapOptions& opts) {
  if (opts.phi_steps < 1 || opts.alpha_steps < 1) {
    raise(ErrorKind::Config, "map: --phi-steps and --alpha-steps must be at least 1");
  }
  const auto phis = phi_grid(cfg, opts.phi_steps);
  const auto alphas = alpha_grid(cfg, opts.alpha_steps);
  const auto map = sign_map(cfg.load.build(), cfg.material, cfg.inclusion, phis, alphas,
                            cfg.numerics, cfg.min_angle);
  Table t{meta_for("map", cfg), {"phi_deg", "alpha_deg", "delta_sigma0", "sign", "est_error"}, {}};
  t.meta["phi_steps"] = opts.phi_steps;
  t.meta["alpha_steps"] = opts.alpha_steps;
  t.meta["sigma0"] = map.cells.empty() ? 0.0 : map.cells.front().sigma0;
  t.meta["epsilon"] = cfg.inclusion.epsilon();
  for (std::size_t i = 0; i < phis.size(); ++i) {
    for (std::size_t k = 0; k < alphas.size(); ++k) {
      const auto& c = map.cells[i * alphas.size() + k];
      t.rows.push_back(
          {phis[i] / kDeg, alphas[k] / kDeg, c.delta_sigma0, to_string(c.sign), c.est_error});
    }
  }
  return t;
}

void write_sign_pgm(const Table& map, int phi_steps, int alpha_steps, std::ostream& out) {
  out << "P2\n" << alpha_steps << ' ' << phi_steps << "\n255\n";
  for (int i = 0; i < phi_steps; ++i) {
    for (int k = 0; k < alpha_steps; ++k) {
      const auto& sign = map.rows[static_cast<std::size_t>(i * alpha_steps + k)][3];
      const int level = sign == "amplifying" ? 64 : sign == "shielding" ? 255 : 160;
      out << (k ? " " : "") << level;
    }
    out << '\n';
  }
}

}  // namespace ifcrack::cli
