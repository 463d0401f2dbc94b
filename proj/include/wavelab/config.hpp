#ifndef WAVELAB_CONFIG_HPP
#define WAVELAB_CONFIG_HPP

#include <string>

#include "wavelab/double_slit.hpp"
#include "wavelab/evolve.hpp"

namespace wavelab {

/// File-backed run description. The on-disk format is flat INI: [section]
/// headers, key = value lines, '#' starts a comment, UTF-8. Parsing is
/// fail-closed: unknown sections or keys are errors, and every diagnostic
/// names the offending section.key.
struct RunConfig {
  // [grid]
  double xmin = -10.0;
  double xmax = 10.0;
  std::size_t n = 0;
  bool has_y_axis = false;
  double ymin = 0.0;
  double ymax = 0.0;
  std::size_t ny = 0;

  // [time]
  double dt = 0.0;
  long steps = 0;
  long snapshot_every = 0;
  Scheme scheme = Scheme::split_step;

  // [units]
  UnitSystem unit_system = UnitSystem::natural;

  // [particle]  (natural-units runs only)
  bool has_mass = false;
  double mass = 1.0;
  bool has_hbar = false;
  double hbar = 1.0;

  // [initial]
  InitialStateSpec initial;

  // [potential]
  PotentialSpec potential = FreeSpec{};
  std::string tabulated_file;  // kept for the config echo

  // [output]
  std::string output_dir;  // empty: resolve via flag/env/default
  enum class OutputFormat { csv, binary, both };
  OutputFormat format = OutputFormat::both;

  // [screen]  (double-slit runs)
  bool has_screen = false;
  double screen_x = 0.0;
  double screen_min_flux = 0.01;
  bool absorber = false;
};

RunConfig parse_run_config_text(const std::string& text);
RunConfig parse_run_config(const std::string& path);

/// Canonical INI echo; parse_run_config_text(render_run_config(c)) is
/// equivalent to c.
std::string render_run_config(const RunConfig& config);

ConstantsSet config_constants(const RunConfig& config);

/// 1D evolution setup. Rejects 2D grids (those belong to the double-slit
/// runner).
SimConfig to_sim_config(const RunConfig& config);

/// 2D double-slit setup. Requires a y axis, a double_slit potential, a
/// gaussian initial beam and a [screen] section.
DoubleSlitConfig to_double_slit_config(const RunConfig& config);

/// flag > config > WAVELAB_OUTPUT_DIR env var > "wavelab_out".
std::string resolve_output_dir(const RunConfig& config,
                               const std::string& flag_value);

}  // namespace wavelab

#endif  // WAVELAB_CONFIG_HPP
