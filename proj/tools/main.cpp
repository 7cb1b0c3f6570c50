#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include <CLI11.hpp>

#include "commands.hpp"
#include "ifcrack/error.hpp"
#include "run_config.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitNumeric = 3;

using namespace ifcrack;
using namespace ifcrack::cli;

// what() carries the kind as a prefix; config messages read better without it.
std::string message(const Error& e) {
  const std::string prefix = std::string(to_string(e.kind())) + ": ";
  std::string w = e.what();
  return w.rfind(prefix, 0) == 0 ? w.substr(prefix.size()) : w;
}

struct Args {
  std::string config_path;
  std::string out_path;
  std::string format;
  std::string axis = "kappa_star";
  double from = 0.0;
  double to = 0.0;
  int points = 0;
  bool log = false;
  MapOptions map;
  std::string pgm;
};

int run(const std::string& command, const Args& args, const CLI::App& sub) {
  // Config stage: everything here that fails is the user's input.
  RunConfig cfg;
  Format format = command == "sigma0" ? Format::Json : Format::Csv;
  Range range;
  try {
    cfg = args.config_path.empty() ? default_config(command)
                                   : load_config_file(args.config_path, command);
    if (!args.format.empty()) format = args.format == "json" ? Format::Json : Format::Csv;
    if (command == "sweep" || command == "ratio") {
      range = default_range(command == "ratio" ? "kappa_star" : args.axis);
      if (command == "ratio") range = {1e-2, 1e2, 9, true};
      if (sub.count("--from")) range.from = args.from;
      if (sub.count("--to")) range.to = args.to;
      if (sub.count("--points")) range.points = args.points;
      if (sub.count("--log")) range.log = args.log;
      range.validate(command);
    }
    cfg.derived();
    cfg.load.build();
    if (command == "map") cfg.inclusion.validate();
  } catch (const Error& e) {
    std::cerr << "config error: " << message(e) << '\n';
    return kExitConfig;
  }

  std::ofstream file;
  std::ostream* out = &std::cout;
  if (!args.out_path.empty()) {
    file.open(args.out_path);
    if (!file) {
      std::cerr << "config error: --out: cannot write " << args.out_path << '\n';
      return kExitConfig;
    }
    out = &file;
  }

  try {
    if (command == "sigma0") {
      cmd_sigma0(cfg, format, *out);
    } else if (command == "sweep") {
      cmd_sweep(cfg, args.axis, range).write(*out, format);
    } else if (command == "ratio") {
      cmd_ratio(cfg, range).write(*out, format);
    } else {
      MapOptions opts = args.map;
      const Table t = cmd_map(cfg, opts);
      t.write(*out, format);
      if (!args.pgm.empty()) {
        std::ofstream pgm(args.pgm);
        if (!pgm) {
          std::cerr << "config error: --pgm: cannot write " << args.pgm << '\n';
          return kExitConfig;
        }
        write_sign_pgm(t, static_cast<int>(t.rows.size()) / opts.alpha_steps, opts.alpha_steps,
                       pgm);
      }
    }
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::Config) {
      std::cerr << "config error: " << message(e) << '\n';
      return kExitConfig;
    }
    std::cerr << "numeric error: " << e.what() << '\n';
    return kExitNumeric;
  } catch (const std::exception& e) {
    std::cerr << "numeric error: " << e.what() << '\n';
    return kExitNumeric;
  }
  out->flush();
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Crack-tip constant sigma0 for an anti-plane interface crack and its "
               "perturbation by a small inclusion"};
  app.require_subcommand(1);
  Args args;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--config", args.config_path, "JSON run configuration")
        ->check(CLI::ExistingFile);
    sub->add_option("--out", args.out_path, "Output file (default: standard output)");
    sub->add_option("--format", args.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}));
  };
  auto ranged = [&](CLI::App* sub) {
    sub->add_option("--from", args.from, "First grid value");
    sub->add_option("--to", args.to, "Last grid value");
    sub->add_option("--points", args.points, "Number of grid values");
    sub->add_flag("--log", args.log, "Geometric grid");
  };

  auto* s0 = app.add_subcommand("sigma0", "Compute sigma0 for one configuration (JSON)");
  common(s0);
  auto* sweep = app.add_subcommand("sweep", "sigma0 over kappa_star or mu_star (CSV)");
  common(sweep);
  ranged(sweep);
  sweep->add_option("--axis", args.axis, "Swept parameter")
      ->check(CLI::IsMember({"kappa_star", "mu_star"}));
  auto* ratio = app.add_subcommand("ratio", "Ratio r against perfect-interface K_III (CSV)");
  common(ratio);
  ranged(ratio);
  auto* map = app.add_subcommand("map", "Sign of Delta sigma0 over (phi, alpha) (CSV)");
  common(map);
  map->add_option("--phi-steps", args.map.phi_steps, "Polar angles in [5, 175] degrees");
  map->add_option("--alpha-steps", args.map.alpha_steps, "Orientations in [0, 180) degrees");
  map->add_option("--pgm", args.pgm, "Also write the sign raster as a PGM image");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  for (auto* sub : {s0, sweep, ratio, map}) {
    if (sub->parsed()) return run(sub->get_name(), args, *sub);
  }
  return kExitConfig;
}
