#include "wavelab/config.hpp"

#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <vector>

namespace wavelab {
namespace {

std::string trim(const std::string& s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw ConfigError(where + ": " + what);
}

// Raw parse result: section -> ordered key/value pairs.
struct RawConfig {
  std::map<std::string, std::map<std::string, std::string>> sections;
  std::map<std::string, std::set<std::string>> consumed;

  bool has(const std::string& section, const std::string& key) const {
    const auto s = sections.find(section);
    return s != sections.end() && s->second.count(key) > 0;
  }

  std::string take(const std::string& section, const std::string& key) {
    consumed[section].insert(key);
    return sections.at(section).at(key);
  }
};

RawConfig parse_raw(const std::string& text) {
  RawConfig raw;
  std::istringstream in(text);
  std::string line;
  std::string section;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']')
        throw ConfigError("line " + std::to_string(line_no) +
                          ": malformed section header '" + line + "'");
      section = trim(line.substr(1, line.size() - 2));
      if (section.empty())
        throw ConfigError("line " + std::to_string(line_no) +
                          ": empty section name");
      raw.sections[section];
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("line " + std::to_string(line_no) +
                        ": expected key = value, got '" + line + "'");
    if (section.empty())
      throw ConfigError("line " + std::to_string(line_no) +
                        ": key outside any [section]");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty())
      throw ConfigError("line " + std::to_string(line_no) + ": empty key");
    if (raw.sections[section].count(key))
      fail(section + "." + key, "duplicate key");
    raw.sections[section][key] = value;
  }
  return raw;
}

double parse_double(const std::string& where, const std::string& value) {
  try {
    std::size_t used = 0;
    const double v = std::stod(value, &used);
    if (used != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    fail(where, "expected a number, got '" + value + "'");
  }
}

long parse_long(const std::string& where, const std::string& value) {
  try {
    std::size_t used = 0;
    const long v = std::stol(value, &used);
    if (used != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    fail(where, "expected an integer, got '" + value + "'");
  }
}

bool parse_bool(const std::string& where, const std::string& value) {
  if (value == "true" || value == "1" || value == "yes") return true;
  if (value == "false" || value == "0" || value == "no") return false;
  fail(where, "expected a boolean, got '" + value + "'");
}

// Pulls typed values out of one section, tracking what was consumed so
// leftovers can be rejected by name.
class SectionReader {
 public:
  SectionReader(RawConfig& raw, std::string section)
      : raw_(raw), section_(std::move(section)) {}

  bool present() const { return raw_.sections.count(section_) > 0; }
  bool has(const std::string& key) const { return raw_.has(section_, key); }

  std::string require_string(const std::string& key) {
    if (!has(key)) fail(where(key), "missing required key");
    return raw_.take(section_, key);
  }
  double require_double(const std::string& key) {
    return parse_double(where(key), require_string(key));
  }
  long require_long(const std::string& key) {
    return parse_long(where(key), require_string(key));
  }
  double optional_double(const std::string& key, double fallback) {
    return has(key) ? parse_double(where(key), raw_.take(section_, key))
                    : fallback;
  }
  long optional_long(const std::string& key, long fallback) {
    return has(key) ? parse_long(where(key), raw_.take(section_, key))
                    : fallback;
  }
  bool optional_bool(const std::string& key, bool fallback) {
    return has(key) ? parse_bool(where(key), raw_.take(section_, key))
                    : fallback;
  }
  std::string optional_string(const std::string& key,
                              const std::string& fallback) {
    return has(key) ? raw_.take(section_, key) : fallback;
  }

  std::string where(const std::string& key) const {
    return section_ + "." + key;
  }

 private:
  RawConfig& raw_;
  std::string section_;
};

void reject_leftovers(const RawConfig& raw,
                      const std::set<std::string>& known_sections) {
  for (const auto& [section, keys] : raw.sections) {
    if (!known_sections.count(section))
      fail(section, "unknown section");
    const auto consumed = raw.consumed.find(section);
    for (const auto& [key, value] : keys) {
      (void)value;
      if (consumed == raw.consumed.end() || !consumed->second.count(key))
        fail(section + "." + key, "unknown key");
    }
  }
}

std::vector<double> load_tabulated_values(const std::string& where,
                                          const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(where, "cannot open tabulated potential file '" + path + "'");
  std::vector<double> values;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    values.push_back(
        parse_double(where + " (line " + std::to_string(line_no) + ")", line));
  }
  if (values.empty()) fail(where, "tabulated potential file is empty");
  return values;
}

std::string g17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

RunConfig parse_run_config_text(const std::string& text) {
  RawConfig raw = parse_raw(text);
  RunConfig cfg;

  SectionReader grid(raw, "grid");
  if (!grid.present()) fail("grid", "missing required section");
  cfg.xmin = grid.require_double("xmin");
  cfg.xmax = grid.require_double("xmax");
  const long n = grid.require_long("n");
  if (n <= 0) fail("grid.n", "must be positive");
  cfg.n = static_cast<std::size_t>(n);
  cfg.has_y_axis = grid.has("ymin") || grid.has("ymax") || grid.has("ny");
  if (cfg.has_y_axis) {
    cfg.ymin = grid.require_double("ymin");
    cfg.ymax = grid.require_double("ymax");
    const long ny = grid.require_long("ny");
    if (ny <= 0) fail("grid.ny", "must be positive");
    cfg.ny = static_cast<std::size_t>(ny);
  }

  SectionReader time(raw, "time");
  if (!time.present()) fail("time", "missing required section");
  cfg.dt = time.require_double("dt");
  if (!(cfg.dt > 0.0)) fail("time.dt", "must be positive");
  cfg.steps = time.require_long("steps");
  if (cfg.steps < 1) fail("time.steps", "must be at least 1");
  cfg.snapshot_every = time.optional_long("snapshot_every", 0);
  if (cfg.snapshot_every < 0) fail("time.snapshot_every", "must be >= 0");
  const std::string scheme = time.optional_string("scheme", "split_step");
  if (scheme == "split_step")
    cfg.scheme = Scheme::split_step;
  else if (scheme == "crank_nicolson")
    cfg.scheme = Scheme::crank_nicolson;
  else
    fail("time.scheme", "expected split_step or crank_nicolson, got '" +
                            scheme + "'");

  SectionReader units(raw, "units");
  if (units.present()) {
    const std::string system = units.optional_string("system", "natural");
    if (system == "natural")
      cfg.unit_system = UnitSystem::natural;
    else if (system == "si")
      cfg.unit_system = UnitSystem::si;
    else
      fail("units.system", "expected natural or si, got '" + system + "'");
  }

  SectionReader particle(raw, "particle");
  if (particle.present()) {
    if (cfg.unit_system == UnitSystem::si)
      fail("particle.mass", "particle overrides require natural units");
    cfg.has_mass = particle.has("mass");
    cfg.mass = particle.optional_double("mass", 1.0);
    cfg.has_hbar = particle.has("hbar");
    cfg.hbar = particle.optional_double("hbar", 1.0);
    if (!(cfg.mass > 0.0)) fail("particle.mass", "must be positive");
    if (!(cfg.hbar > 0.0)) fail("particle.hbar", "must be positive");
  }

  SectionReader initial(raw, "initial");
  if (!initial.present()) fail("initial", "missing required section");
  const std::string itype = initial.require_string("type");
  if (itype == "gaussian") {
    cfg.initial.type = InitialStateSpec::Type::gaussian;
    cfg.initial.x0 = initial.optional_double("x0", 0.0);
    cfg.initial.p0 = initial.optional_double("p0", 0.0);
    cfg.initial.sigma = initial.require_double("sigma");
    if (!(cfg.initial.sigma > 0.0)) fail("initial.sigma", "must be positive");
    cfg.initial.y0 = initial.optional_double("y0", 0.0);
    cfg.initial.sigma_y = initial.optional_double("sigma_y", -1.0);
    if (initial.has("sigma_y") && !(cfg.initial.sigma_y > 0.0))
      fail("initial.sigma_y", "must be positive");
  } else if (itype == "plane_wave") {
    cfg.initial.type = InitialStateSpec::Type::plane_wave;
    cfg.initial.mode = static_cast<int>(initial.require_long("mode"));
  } else {
    fail("initial.type", "expected gaussian or plane_wave, got '" + itype +
                             "'");
  }

  SectionReader pot(raw, "potential");
  if (!pot.present()) fail("potential", "missing required section");
  const std::string ptype = pot.require_string("type");
  if (ptype == "free") {
    cfg.potential = FreeSpec{};
  } else if (ptype == "harmonic") {
    HarmonicSpec s;
    s.omega = pot.require_double("omega");
    if (!(s.omega > 0.0)) fail("potential.omega", "must be positive");
    cfg.potential = s;
  } else if (ptype == "square_well") {
    SquareWellSpec s;
    s.depth = pot.require_double("depth");
    s.width = pot.require_double("width");
    if (!(s.depth > 0.0)) fail("potential.depth", "must be positive");
    if (!(s.width > 0.0)) fail("potential.width", "must be positive");
    cfg.potential = s;
  } else if (ptype == "barrier") {
    BarrierSpec s;
    s.height = pot.require_double("height");
    s.width = pot.require_double("width");
    s.center = pot.optional_double("center", 0.0);
    if (!(s.height > 0.0)) fail("potential.height", "must be positive");
    if (!(s.width > 0.0)) fail("potential.width", "must be positive");
    cfg.potential = s;
  } else if (ptype == "double_slit") {
    DoubleSlitSpec s;
    s.barrier_height = pot.require_double("barrier_height");
    s.barrier_x = pot.optional_double("barrier_x", 0.0);
    s.barrier_thickness = pot.require_double("barrier_thickness");
    s.slit_separation = pot.require_double("slit_separation");
    s.slit_width = pot.require_double("slit_width");
    s.slit_width_upper = pot.optional_double("slit_width_top", -1.0);
    s.slit_width_lower = pot.optional_double("slit_width_bottom", -1.0);
    if (!(s.barrier_height > 0.0))
      fail("potential.barrier_height", "must be positive");
    cfg.potential = s;
  } else if (ptype == "tabulated") {
    cfg.tabulated_file = pot.require_string("file");
    cfg.potential = TabulatedSpec{
        load_tabulated_values("potential.file", cfg.tabulated_file)};
  } else {
    fail("potential.type", "unknown potential type '" + ptype + "'");
  }

  SectionReader output(raw, "output");
  if (output.present()) {
    cfg.output_dir = output.optional_string("dir", "");
    const std::string format = output.optional_string("format", "both");
    if (format == "csv")
      cfg.format = RunConfig::OutputFormat::csv;
    else if (format == "binary")
      cfg.format = RunConfig::OutputFormat::binary;
    else if (format == "both")
      cfg.format = RunConfig::OutputFormat::both;
    else
      fail("output.format", "expected csv, binary or both, got '" + format +
                                "'");
  }

  SectionReader screen(raw, "screen");
  if (screen.present()) {
    cfg.has_screen = true;
    cfg.screen_x = screen.require_double("x");
    cfg.screen_min_flux = screen.optional_double("min_flux", 0.01);
    cfg.absorber = screen.optional_bool("absorber", false);
  }

  reject_leftovers(raw, {"grid", "time", "units", "particle", "initial",
                         "potential", "output", "screen"});
  return cfg;
}

RunConfig parse_run_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return parse_run_config_text(text.str());
}

std::string render_run_config(const RunConfig& cfg) {
  std::ostringstream out;
  out << "[grid]\n";
  out << "xmin = " << g17(cfg.xmin) << "\n";
  out << "xmax = " << g17(cfg.xmax) << "\n";
  out << "n = " << cfg.n << "\n";
  if (cfg.has_y_axis) {
    out << "ymin = " << g17(cfg.ymin) << "\n";
    out << "ymax = " << g17(cfg.ymax) << "\n";
    out << "ny = " << cfg.ny << "\n";
  }
  out << "\n[time]\n";
  out << "dt = " << g17(cfg.dt) << "\n";
  out << "steps = " << cfg.steps << "\n";
  out << "snapshot_every = " << cfg.snapshot_every << "\n";
  out << "scheme = "
      << (cfg.scheme == Scheme::split_step ? "split_step" : "crank_nicolson")
      << "\n";
  out << "\n[units]\n";
  out << "system = "
      << (cfg.unit_system == UnitSystem::natural ? "natural" : "si") << "\n";
  if (cfg.has_mass || cfg.has_hbar) {
    out << "\n[particle]\n";
    if (cfg.has_mass) out << "mass = " << g17(cfg.mass) << "\n";
    if (cfg.has_hbar) out << "hbar = " << g17(cfg.hbar) << "\n";
  }
  out << "\n[initial]\n";
  if (cfg.initial.type == InitialStateSpec::Type::gaussian) {
    out << "type = gaussian\n";
    out << "x0 = " << g17(cfg.initial.x0) << "\n";
    out << "p0 = " << g17(cfg.initial.p0) << "\n";
    out << "sigma = " << g17(cfg.initial.sigma) << "\n";
    if (cfg.has_y_axis) {
      out << "y0 = " << g17(cfg.initial.y0) << "\n";
      if (cfg.initial.sigma_y > 0.0)
        out << "sigma_y = " << g17(cfg.initial.sigma_y) << "\n";
    }
  } else {
    out << "type = plane_wave\n";
    out << "mode = " << cfg.initial.mode << "\n";
  }
  out << "\n[potential]\n";
  out << "type = " << potential_kind_name(cfg.potential) << "\n";
  std::visit(
      [&](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, HarmonicSpec>) {
          out << "omega = " << g17(s.omega) << "\n";
        } else if constexpr (std::is_same_v<T, SquareWellSpec>) {
          out << "depth = " << g17(s.depth) << "\n";
          out << "width = " << g17(s.width) << "\n";
        } else if constexpr (std::is_same_v<T, BarrierSpec>) {
          out << "height = " << g17(s.height) << "\n";
          out << "width = " << g17(s.width) << "\n";
          out << "center = " << g17(s.center) << "\n";
        } else if constexpr (std::is_same_v<T, DoubleSlitSpec>) {
          out << "barrier_height = " << g17(s.barrier_height) << "\n";
          out << "barrier_x = " << g17(s.barrier_x) << "\n";
          out << "barrier_thickness = " << g17(s.barrier_thickness) << "\n";
          out << "slit_separation = " << g17(s.slit_separation) << "\n";
          out << "slit_width = " << g17(s.slit_width) << "\n";
          if (s.slit_width_upper >= 0.0)
            out << "slit_width_top = " << g17(s.slit_width_upper) << "\n";
          if (s.slit_width_lower >= 0.0)
            out << "slit_width_bottom = " << g17(s.slit_width_lower) << "\n";
        } else if constexpr (std::is_same_v<T, TabulatedSpec>) {
          out << "file = " << cfg.tabulated_file << "\n";
        }
      },
      cfg.potential);
  out << "\n[output]\n";
  if (!cfg.output_dir.empty()) out << "dir = " << cfg.output_dir << "\n";
  out << "format = "
      << (cfg.format == RunConfig::OutputFormat::csv      ? "csv"
          : cfg.format == RunConfig::OutputFormat::binary ? "binary"
                                                          : "both")
      << "\n";
  if (cfg.has_screen) {
    out << "\n[screen]\n";
    out << "x = " << g17(cfg.screen_x) << "\n";
    out << "min_flux = " << g17(cfg.screen_min_flux) << "\n";
    out << "absorber = " << (cfg.absorber ? "true" : "false") << "\n";
  }
  return out.str();
}

ConstantsSet config_constants(const RunConfig& cfg) {
  if (cfg.unit_system == UnitSystem::si) return ConstantsSet::si();
  ConstantsSet cs = ConstantsSet::natural();
  if (cfg.has_mass || cfg.has_hbar)
    cs = cs.with_particle(cfg.hbar, cfg.mass);
  return cs;
}

SimConfig to_sim_config(const RunConfig& cfg) {
  if (cfg.has_y_axis)
    throw ConfigError(
        "grid.ny: 2D grids are handled by the double-slit runner");
  SimConfig sim{SpatialGrid(cfg.xmin, cfg.xmax, cfg.n), config_constants(cfg),
                cfg.potential, cfg.initial, cfg.dt, cfg.steps,
                cfg.snapshot_every, cfg.scheme};
  return sim;
}

DoubleSlitConfig to_double_slit_config(const RunConfig& cfg) {
  if (!cfg.has_y_axis)
    throw ConfigError("grid.ny: double-slit runs need a 2D grid");
  const auto* slit = std::get_if<DoubleSlitSpec>(&cfg.potential);
  if (!slit)
    throw ConfigError("potential.type: double-slit runs need type = "
                      "double_slit, got " +
                      potential_kind_name(cfg.potential));
  if (cfg.initial.type != InitialStateSpec::Type::gaussian)
    throw ConfigError("initial.type: double-slit runs need a gaussian beam");
  if (!cfg.has_screen) throw ConfigError("screen.x: missing screen plane");
  if (cfg.scheme != Scheme::split_step)
    throw ConfigError("time.scheme: double-slit runs are split-step only");

  return DoubleSlitConfig{
      .grid = SpatialGrid2D{SpatialGrid(cfg.xmin, cfg.xmax, cfg.n),
                            SpatialGrid(cfg.ymin, cfg.ymax, cfg.ny)},
      .constants = config_constants(cfg),
      .slit = *slit,
      .x0 = cfg.initial.x0,
      .y0 = cfg.initial.y0,
      .p0 = cfg.initial.p0,
      .sigma_x = cfg.initial.sigma,
      .sigma_y =
          cfg.initial.sigma_y > 0.0 ? cfg.initial.sigma_y : cfg.initial.sigma,
      .dt = cfg.dt,
      .steps = cfg.steps,
      .screen_x = cfg.screen_x,
      .min_transmitted = cfg.screen_min_flux,
      .absorber = cfg.absorber};
}

std::string resolve_output_dir(const RunConfig& cfg,
                               const std::string& flag_value) {
  if (!flag_value.empty()) return flag_value;
  if (!cfg.output_dir.empty()) return cfg.output_dir;
  if (const char* env = std::getenv("WAVELAB_OUTPUT_DIR"); env && *env)
    return env;
  return "wavelab_out";
}

}  // namespace wavelab
