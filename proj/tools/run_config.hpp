#pragma once

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "ifcrack/model.hpp"
#include "ifcrack/quadrature.hpp"

namespace ifcrack::cli {

struct LoadConfig {
  LoadKind kind = LoadKind::PointTriple;
  double F = 1.0;
  double a = 1.0;
  double b = 0.75;

  CrackLoad build() const;
  /// Length used to form kappa_star: a for point loads, 1 for smooth loads.
  double reference_length() const;
};

struct RatioConfig {
  double mu_star_1 = 0.0;
  double mu_star_2 = 0.5;
};

/// Everything a command needs, validated field by field before any
/// computation. Angles are stored in radians and read/written in degrees.
struct RunConfig {
  Bimaterial material;
  LoadConfig load;
  InclusionSpec inclusion;
  double min_angle = 5.0 * 3.14159265358979323846 / 180.0;
  RatioConfig ratio;
  numerics::QuadratureSpec numerics;

  DerivedParams derived() const { return derive_params(material, load.reference_length()); }
  nlohmann::json to_json() const;
};

/// Defaults per command: `map` uses smooth loads and kappa_star = 1, nu_star = 5;
/// the others point loads a = 1, b = 3/4, mu_star = 0, kappa_star = 1.
RunConfig default_config(std::string_view command);

/// Overlays `j` on the command defaults. Throws Error(Config) naming the
/// offending field.
RunConfig parse_config(const nlohmann::json& j, std::string_view command);
RunConfig load_config_file(const std::string& path, std::string_view command);

}  // namespace ifcrack::cli
