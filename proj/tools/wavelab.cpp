// wavelab command-line front end: config-driven evolution runs, the
// dispersion gate, hydrogen spectra and photoelectric tables, and snapshot
// inspection. Exit codes: 0 success, 1 failed --check, 2 configuration or
// usage error, 3 runtime error.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "wavelab/config.hpp"
#include "wavelab/dispersion_gate.hpp"
#include "wavelab/io.hpp"
#include "wavelab/oldquantum.hpp"

namespace {

constexpr const char* kVersion = "1.0.0";

using namespace wavelab;

std::string candidate_name(CandidateEquation c) {
  return c == CandidateEquation::second_order_time ? "second_order_time"
                                                   : "first_order_time";
}

std::string snapshot_stem(const std::string& dir, std::size_t index) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "snapshot_%06zu", index);
  return dir + "/" + buf;
}

template <typename State>
void write_snapshot_files(const std::string& stem, const State& wf,
                          RunConfig::OutputFormat format) {
  if (format != RunConfig::OutputFormat::binary)
    write_snapshot_csv(stem + ".csv", wf);
  if (format != RunConfig::OutputFormat::csv)
    write_snapshot_binary(stem + ".wvlb", wf);
}

void write_manifest(const std::string& dir, const RunConfig& cfg,
                    double wall_seconds) {
  std::ostringstream out;
  out << "# wavelab " << kVersion << "\n";
  out << "# wall_time_s = " << format_double(wall_seconds) << "\n";
  out << "# config echo follows; this file re-parses as a run config\n\n";
  out << render_run_config(cfg);
  write_text_atomic(dir + "/manifest.ini", out.str());
}

int cmd_evolve(const std::string& config_path, const std::string& out_flag) {
  const RunConfig cfg = parse_run_config(config_path);
  const SimConfig sim = to_sim_config(cfg);
  const std::string dir = resolve_output_dir(cfg, out_flag);
  std::filesystem::create_directories(dir);

  const auto t0 = std::chrono::steady_clock::now();
  const Trajectory traj = evolve(sim);
  const std::chrono::duration<double> wall =
      std::chrono::steady_clock::now() - t0;

  write_series_csv(dir + "/series.csv", traj.series);
  for (std::size_t i = 0; i < traj.snapshots.size(); ++i)
    write_snapshot_files(snapshot_stem(dir, i), traj.snapshots[i], cfg.format);
  write_manifest(dir, cfg, wall.count());

  const auto& last = traj.series.back();
  std::cout << "evolved " << sim.steps << " steps to t = "
            << format_double(last.t) << "\n"
            << "final norm = " << format_double(last.norm)
            << ", <x> = " << format_double(last.x_mean)
            << ", <p> = " << format_double(last.p_mean) << "\n"
            << "wrote " << traj.snapshots.size() << " snapshot(s) to " << dir
            << "\n";
  return 0;
}

int cmd_double_slit(const std::string& config_path, const std::string& out_flag,
                    bool single_slit) {
  const RunConfig cfg = parse_run_config(config_path);
  DoubleSlitConfig ds = to_double_slit_config(cfg);
  if (single_slit) ds.slit.slit_width_lower = 0.0;
  const std::string dir = resolve_output_dir(cfg, out_flag);
  std::filesystem::create_directories(dir);

  const auto t0 = std::chrono::steady_clock::now();
  const DoubleSlitResult result = double_slit_run(ds);
  const std::chrono::duration<double> wall =
      std::chrono::steady_clock::now() - t0;

  const FringeAnalysis fringes = analyze_fringes(result.profile);
  write_profile_csv(dir + "/profile.csv", result.profile);
  write_fringe_summary(dir + "/fringes.txt", fringes, result.profile);
  write_snapshot_files(dir + "/final_state", result.final_state, cfg.format);
  write_manifest(dir, cfg, wall.count());

  std::cout << "transmitted fraction = "
            << format_double(result.profile.transmitted_fraction) << "\n"
            << "detected maxima = " << fringes.maxima_y.size()
            << ", central at y = " << format_double(fringes.central_y) << "\n";
  if (fringes.spacing_estimate > 0.0)
    std::cout << "fringe spacing = " << format_double(fringes.spacing_estimate)
              << " (two-slit prediction lambda D / d = "
              << format_double(fringes.predicted_spacing) << ")\n";
  std::cout << "wrote profile and fringe summary to " << dir << "\n";
  return 0;
}

int cmd_dispersion_gate(const std::vector<double>& ks, double hbar,
                        double mass, double tolerance, bool machine) {
  if (ks.size() < 3) {
    std::cerr << "dispersion-gate needs at least 3 wavenumbers (--k)\n";
    return 2;
  }
  const ConstantsSet cs = ConstantsSet::natural().with_particle(hbar, mass);
  const auto [second, first] = run_gate(ks, cs, tolerance);

  const auto print_report = [&](const GateReport& report) {
    const std::string name = candidate_name(report.candidate);
    if (machine) {
      for (const auto& s : report.gamma_samples)
        std::cout << "candidate=" << name << " k=" << format_double(s.k)
                  << " gamma_re=" << format_double(s.gamma.real())
                  << " gamma_im=" << format_double(s.gamma.imag()) << "\n";
      std::cout << "candidate=" << name
                << " spread=" << format_double(report.max_pairwise_spread)
                << " tolerance=" << format_double(report.tolerance)
                << " verdict=" << (report.k_independent ? "ACCEPT" : "REJECT")
                << "\n";
      return;
    }
    std::cout << name << ":\n";
    char line[128];
    for (const auto& s : report.gamma_samples) {
      std::snprintf(line, sizeof(line), "  k = %-10.6g gamma = %.6g%+.6gi\n",
                    s.k, s.gamma.real(), s.gamma.imag());
      std::cout << line;
    }
    std::snprintf(line, sizeof(line), "  spread = %.3g (tolerance %.3g) -> ",
                  report.max_pairwise_spread, report.tolerance);
    std::cout << line
              << (report.k_independent ? "ACCEPT" : "REJECT")
              << (report.k_independent
                      ? ": coefficient is a constant; superposition holds "
                        "across wavenumbers"
                      : ": coefficient depends on k; rejected")
              << "\n";
  };

  print_report(second);
  print_report(first);
  return 0;
}

int cmd_spectra(const std::string& series, int max_upper, int upper, int lower,
                const std::string& csv_path) {
  const ConstantsSet cs = ConstantsSet::si();
  std::vector<SpectralLine> lines;
  if (!series.empty()) {
    int m = 0;
    if (series == "lyman") m = 1;
    else if (series == "balmer") m = 2;
    else if (series == "paschen") m = 3;
    else {
      std::cerr << "unknown series '" << series
                << "' (expected lyman, balmer or paschen)\n";
      return 2;
    }
    if (max_upper <= m) {
      std::cerr << "--max-upper must exceed the series lower level " << m
                << "\n";
      return 2;
    }
    for (int n = m + 1; n <= max_upper; ++n)
      lines.push_back(transition(n, m, cs));
  } else {
    lines.push_back(transition(upper, lower, cs));
  }

  std::printf("%6s %6s %12s %14s %12s\n", "upper", "lower", "lambda_nm",
              "freq_THz", "E_gamma_eV");
  for (const auto& line : lines)
    std::printf("%6d %6d %12.4f %14.4f %12.6f\n", line.n_upper, line.n_lower,
                line.lambda * 1e9, line.frequency * 1e-12,
                line.E_gamma / cs.ev());

  if (!csv_path.empty()) {
    std::ofstream out(csv_path);
    if (!out) throw IoError("cannot open '" + csv_path + "'");
    out << "n_upper,n_lower,lambda_m,frequency_hz,e_gamma_j\n";
    for (const auto& line : lines)
      out << line.n_upper << ',' << line.n_lower << ','
          << format_double(line.lambda) << ',' << format_double(line.frequency)
          << ',' << format_double(line.E_gamma) << '\n';
  }
  return 0;
}

int cmd_bohr(int n) {
  const ConstantsSet cs = ConstantsSet::si();
  const BohrState s = bohr_state(n, cs);
  std::printf("n        = %d\n", s.n);
  std::printf("r_n      = %.10e m  (%.6g a0)\n", s.r_n, s.r_n / cs.a0());
  std::printf("E_n      = %.10e J  (%.6f eV)\n", s.E_n, s.E_n / cs.ev());
  std::printf("v_n      = %.10e m/s  (%.6g c)\n", s.v_n, s.v_n / cs.c());
  std::printf("L_n      = %.10e J s  (%.6g hbar)\n", s.L_n, s.L_n / cs.hbar());
  return 0;
}

int cmd_photoelectric(double work_ev, double photon_ev, double frequency) {
  const ConstantsSet cs = ConstantsSet::si();
  const double phi = work_ev * cs.ev();
  const PhotoelectricResult r =
      frequency > 0.0
          ? photoelectric_from_frequency(frequency, phi, cs)
          : photoelectric_from_energy(photon_ev * cs.ev(), phi, cs);

  std::printf("photon energy       = %.6f eV\n", r.photon_energy / cs.ev());
  std::printf("work function       = %.6f eV\n", r.work_function / cs.ev());
  std::printf("threshold frequency = %.6e Hz\n", r.threshold_frequency);
  if (r.emitted)
    std::printf("emission: yes, ke_max = %.6f eV\n", *r.ke_max / cs.ev());
  else
    std::printf("emission: no (photon energy does not exceed the work "
                "function)\n");
  return 0;
}

int cmd_observables(const std::string& snapshot_path, bool check, double hbar,
                    double mass) {
  Snapshot snap = read_snapshot(snapshot_path);
  const auto* wf = std::get_if<WaveFunction>(&snap);
  if (!wf)
    throw IoError("'" + snapshot_path +
                  "': observables are reported for 1D snapshots only");
  const ConstantsSet cs = ConstantsSet::natural().with_particle(hbar, mass);
  const ObservableReport r = observable_report(*wf, cs);

  std::printf("t                   = %.17g\n", wf->t);
  std::printf("norm                = %.17g\n", r.norm);
  std::printf("x_mean              = %.17g\n", r.x_mean);
  std::printf("x_var               = %.17g\n", r.x_var);
  std::printf("p_mean              = %.17g\n", r.p_mean);
  std::printf("p_var               = %.17g\n", r.p_var);
  std::printf("kinetic_energy      = %.17g\n", r.kinetic_energy);
  std::printf("potential_energy    = %.17g  (V = 0 assumed)\n",
              r.potential_energy);
  std::printf("total_energy        = %.17g\n", r.total_energy);
  std::printf("uncertainty_product = %.17g  (hbar/2 = %.17g)\n",
              r.uncertainty_product, 0.5 * cs.hbar());

  if (check) {
    bool ok = true;
    if (std::abs(r.norm - 1.0) > 1e-6) {
      std::printf("CHECK FAILED: norm deviates from 1 by %.3e\n",
                  std::abs(r.norm - 1.0));
      ok = false;
    }
    if (r.uncertainty_product < 0.5 * cs.hbar() - 1e-9) {
      std::printf("CHECK FAILED: uncertainty product %.17g below hbar/2\n",
                  r.uncertainty_product);
      ok = false;
    }
    if (!ok) return 1;
    std::printf("checks passed\n");
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"wave-mechanics workbench: Schrodinger evolution, dispersion "
               "gate, Bohr/Rydberg tables"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  std::string config_path;
  std::string output_dir;
  bool single_slit = false;

  auto* evolve_cmd =
      app.add_subcommand("evolve", "run a configured 1D evolution");
  evolve_cmd->add_option("config", config_path, "run config file")->required();
  evolve_cmd->add_option("--output-dir", output_dir,
                         "override the output directory");

  auto* slit_cmd = app.add_subcommand(
      "double-slit", "run the 2D slit-barrier interference scenario");
  slit_cmd->add_option("config", config_path, "run config file")->required();
  slit_cmd->add_option("--output-dir", output_dir,
                       "override the output directory");
  slit_cmd->add_flag("--single-slit", single_slit,
                     "close the lower slit (control run)");

  std::vector<double> gate_ks;
  double gate_hbar = 1.0, gate_mass = 1.0, gate_tol = 1e-12;
  bool gate_machine = false;
  auto* gate_cmd = app.add_subcommand(
      "dispersion-gate",
      "substitute a traveling wave into both candidate equations and report "
      "which coefficient is constant");
  gate_cmd->add_option("--k", gate_ks, "wavenumber samples (>= 3)")
      ->expected(-1);
  gate_cmd->add_option("--hbar", gate_hbar, "hbar (natural units)");
  gate_cmd->add_option("--mass", gate_mass, "particle mass (natural units)");
  gate_cmd->add_option("--tolerance", gate_tol,
                       "constancy tolerance on the gamma spread");
  gate_cmd->add_flag("--machine", gate_machine,
                     "flat key=value output, one record per line");

  std::string series;
  int max_upper = 6, upper = 0, lower = 0;
  std::string csv_path;
  auto* spectra_cmd =
      app.add_subcommand("spectra", "hydrogen spectral lines (Bohr levels)");
  spectra_cmd->add_option("--series", series,
                          "named series: lyman, balmer or paschen");
  spectra_cmd->add_option("--max-upper", max_upper,
                          "largest upper level for a named series");
  spectra_cmd->add_option("--upper", upper, "upper level for a single line");
  spectra_cmd->add_option("--lower", lower, "lower level for a single line");
  spectra_cmd->add_option("--csv", csv_path, "also write the table as CSV");

  int bohr_n = 1;
  auto* bohr_cmd = app.add_subcommand("bohr", "one Bohr orbit");
  bohr_cmd->add_option("--n", bohr_n, "principal quantum number")->required();

  double work_ev = 0.0, photon_ev = 0.0, pe_frequency = 0.0;
  auto* pe_cmd =
      app.add_subcommand("photoelectric", "photoemission threshold bookkeeping");
  pe_cmd->add_option("--work-function-ev", work_ev, "work function in eV")
      ->required();
  pe_cmd->add_option("--photon-ev", photon_ev, "photon energy in eV");
  pe_cmd->add_option("--frequency", pe_frequency, "photon frequency in Hz");

  std::string snapshot_path;
  bool check = false;
  double obs_hbar = 1.0, obs_mass = 1.0;
  auto* obs_cmd =
      app.add_subcommand("observables", "report Born-rule observables of a "
                                        "stored snapshot");
  obs_cmd->add_option("--snapshot", snapshot_path, "snapshot file")
      ->required();
  obs_cmd->add_flag("--check", check,
                    "exit nonzero if norm or the uncertainty bound fails");
  obs_cmd->add_option("--hbar", obs_hbar, "hbar (natural units)");
  obs_cmd->add_option("--mass", obs_mass, "particle mass (natural units)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (app.got_subcommand(evolve_cmd))
      return cmd_evolve(config_path, output_dir);
    if (app.got_subcommand(slit_cmd))
      return cmd_double_slit(config_path, output_dir, single_slit);
    if (app.got_subcommand(gate_cmd))
      return cmd_dispersion_gate(gate_ks, gate_hbar, gate_mass, gate_tol,
                                 gate_machine);
    if (app.got_subcommand(spectra_cmd)) {
      if (series.empty() && (upper == 0 || lower == 0)) {
        std::cerr << "spectra needs --series or both --upper and --lower\n";
        return 2;
      }
      return cmd_spectra(series, max_upper, upper, lower, csv_path);
    }
    if (app.got_subcommand(bohr_cmd)) return cmd_bohr(bohr_n);
    if (app.got_subcommand(pe_cmd)) {
      if ((photon_ev > 0.0) == (pe_frequency > 0.0)) {
        std::cerr
            << "photoelectric needs exactly one of --photon-ev, --frequency\n";
        return 2;
      }
      return cmd_photoelectric(work_ev, photon_ev, pe_frequency);
    }
    if (app.got_subcommand(obs_cmd))
      return cmd_observables(snapshot_path, check, obs_hbar, obs_mass);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const BadQuantumNumbers& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const NonPositiveQuantumNumber& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const NonPositiveWorkFunction& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const NonPositiveFrequency& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const InsufficientSamples& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ZeroWavenumber& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "runtime error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
