// Flat key=value run configuration.
//
// Grammar: one `key = value` pair per line; blank lines and lines starting
// with '#' are ignored; unknown keys are hard errors.  Keys:
//   problem, k, nx, ny, cfl, t_end, limiter.enabled, limiter.c0, gamma,
//   output.dir, output.every_n_steps, seed
// Unset t_end / gamma / limiter.enabled / limiter.c0 fall back to the
// selected problem's recommendation.

#pragma once

#include <optional>
#include <string>

namespace esdg {

struct Config {
  std::string problem = "vortex";
  int k = 2;
  int nx = 64, ny = 64;
  double cfl = 0.45;
  std::optional<double> t_end;
  std::optional<bool> limiter_enabled;
  std::optional<double> limiter_c0;
  std::optional<double> gamma;
  std::string output_dir = "out";
  int output_every_n_steps = 10;
  unsigned long seed = 12345;
};

Config parse_config_text(const std::string& text);
Config load_config(const std::string& path);

}  // namespace esdg
