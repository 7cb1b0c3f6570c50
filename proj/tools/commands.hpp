#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "run_config.hpp"

namespace ifcrack::cli {

enum class Format { Csv, Json };

/// Grid of `points` values from `from` to `to` inclusive, geometric when `log`.
struct Range {
  double from = 0.0;
  double to = 0.0;
  int points = 1;
  bool log = false;

  /// Throws Error(Config) naming `field` on an empty, unordered or
  /// non-positive log range.
  void validate(const std::string& field) const;
  std::vector<double> grid() const;
  nlohmann::json to_json() const;
};

/// Rows of numbers or strings written as CSV (with a `#` JSON metadata line)
/// or as one JSON document.
struct Table {
  nlohmann::json meta;
  std::vector<std::string> columns;
  std::vector<std::vector<nlohmann::json>> rows;

  void write(std::ostream& out, Format format) const;
};

std::string format_number(double v);

struct MapOptions {
  int phi_steps = 60;
  int alpha_steps = 60;
  std::optional<std::string> pgm_path;
};

/// The commands return the table they wrote; sigma0 writes a single JSON
/// object (or a one-row CSV).
void cmd_sigma0(const RunConfig& cfg, Format format, std::ostream& out);
Table cmd_sweep(const RunConfig& cfg, const std::string& axis, const Range& range);
Table cmd_ratio(const RunConfig& cfg, const Range& range);
Table cmd_map(const RunConfig& cfg, const MapOptions& opts);

/// Default sweep range for an axis: kappa_star log 1e-4..1e4 (9 points),
/// mu_star linear -0.99..0.99 (23 points).
Range default_range(const std::string& axis);

/// PGM (P2) raster of the sign map: rows phi, columns alpha; darker where
/// Delta sigma0 > 0.
void write_sign_pgm(const Table& map, int phi_steps, int alpha_steps, std::ostream& out);

}  // namespace ifcrack::cli
