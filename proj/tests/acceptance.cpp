// Acceptance suite: one pass/fail line per criterion, nonzero exit if any
// fail. Tolerances are pinned in code next to each check.
//
// Desk scale: 1D n = 1024 grids and <= 1e4 steps run in seconds; the 2D
// 256x256 slit scenario stays within a couple of minutes.

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdarg>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "wavelab/config.hpp"
#include "wavelab/dispersion_gate.hpp"
#include "wavelab/double_slit.hpp"
#include "wavelab/evolve.hpp"
#include "wavelab/io.hpp"
#include "wavelab/observe.hpp"
#include "wavelab/oldquantum.hpp"

using namespace wavelab;
namespace fs = std::filesystem;

namespace {

int g_failures = 0;

void report(int id, const std::string& name, bool pass,
            const std::string& detail) {
  std::printf("[%s] criterion %2d: %s (%s)\n", pass ? "PASS" : "FAIL", id,
              name.c_str(), detail.c_str());
  if (!pass) ++g_failures;
}

std::string fmt(const char* format, ...) {
  char buf[512];
  va_list args;
  va_start(args, format);
  std::vsnprintf(buf, sizeof(buf), format, args);
  va_end(args);
  return buf;
}

WaveFunction random_state(const SpatialGrid& g, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<cplx> psi(g.size());
  for (auto& a : psi) a = cplx(u(rng), u(rng));
  return normalize(WaveFunction(g, std::move(psi)));
}

double l2_gap(const WaveFunction& a, const WaveFunction& b) {
  double sum = 0.0;
  for (std::size_t j = 0; j < a.psi.size(); ++j)
    sum += std::norm(a.psi[j] - b.psi[j]);
  return std::sqrt(sum * a.grid.dx());
}

// --- criterion 1: derivation gate --------------------------------------

void criterion_gate() {
  const auto cs = ConstantsSet::natural();
  const std::vector<double> ks{0.5, 1.0, 2.0, 4.0};

  const auto t0 = std::chrono::steady_clock::now();
  const auto [second, first] = run_gate(ks, cs, 1e-12);
  const std::chrono::duration<double, std::milli> elapsed =
      std::chrono::steady_clock::now() - t0;

  double lo = 1e300, hi = 0.0;
  for (const auto& s : second.gamma_samples) {
    lo = std::min(lo, std::abs(s.gamma));
    hi = std::max(hi, std::abs(s.gamma));
  }
  const double ratio = hi / lo;
  const cplx expected_gamma(0.0, cs.hbar() / (2.0 * cs.m_e()));
  bool first_ok = first.k_independent &&
                  first.max_pairwise_spread < 1e-12;
  for (const auto& s : first.gamma_samples)
    first_ok = first_ok && std::abs(s.gamma - expected_gamma) < 1e-14;

  const bool pass = !second.k_independent &&
                    std::abs(ratio - 64.0) < 1e-10 && first_ok &&
                    elapsed.count() < 1.0;
  report(1, "dispersion gate rejects k-dependent gamma", pass,
         fmt("second-order gamma ratio %.12g (expect 64, REJECT); "
             "first-order spread %.2e < 1e-12 (ACCEPT); %.3f ms",
             ratio, first.max_pairwise_spread, elapsed.count()));
}

// --- criterion 2: free plane-wave evolution ------------------------------

void criterion_free_wave() {
  const auto cs = ConstantsSet::natural();
  const auto g = make_grid(-8.0, 8.0, 256);
  const double residual = free_evolution_residual(g, 5, 1.0, 1000, cs);
  report(2, "split-step free mode matches exp(-i omega t)", residual < 1e-10,
         fmt("L2 residual %.3e < 1e-10 at t = 1, 1000 steps", residual));
}

// --- criterion 3: norm conservation over 1e4 steps -----------------------

void criterion_norm_conservation() {
  const auto cs = ConstantsSet::natural();
  const auto g = make_grid(-12.0, 12.0, 512);
  const auto V = build_potential(BarrierSpec{8.0, 1.0, 3.0}, g, cs);

  auto wf = gaussian_packet(g, -4.0, 2.0, 1.0, cs);
  SplitStepPropagator split(g, V, 1e-3, cs);
  double worst_split = 0.0;
  for (int s = 0; s < 10'000; ++s) {
    split.step(wf);
    worst_split = std::max(worst_split, std::abs(norm(wf) - 1.0));
  }

  wf = gaussian_packet(g, -4.0, 2.0, 1.0, cs);
  CrankNicolsonPropagator cn(g, V, 1e-3, cs);
  double worst_cn = 0.0;
  for (int s = 0; s < 10'000; ++s) {
    cn.step(wf);
    worst_cn = std::max(worst_cn, std::abs(norm(wf) - 1.0));
  }

  report(3, "norm stays within 1e-9 over 1e4 steps (barrier)",
         worst_split < 1e-9 && worst_cn < 1e-9,
         fmt("max |norm-1|: split-step %.3e, Crank-Nicolson %.3e",
             worst_split, worst_cn));
}

// --- criterion 4: superposition ------------------------------------------

void criterion_superposition() {
  const auto cs = ConstantsSet::natural();
  const auto g = make_grid(-9.0, 9.0, 256);
  const auto V = build_potential(HarmonicSpec{0.8}, g, cs);
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(-1.0, 1.0);

  double worst = 0.0;
  for (int trial = 0; trial < 10; ++trial) {
    const cplx alpha(u(rng), u(rng));
    const cplx beta(u(rng), u(rng));
    const auto psi1 = random_state(g, 300 + trial);
    const auto psi2 = random_state(g, 400 + trial);
    WaveFunction combo(g, std::vector<cplx>(g.size()));
    for (std::size_t j = 0; j < g.size(); ++j)
      combo.psi[j] = alpha * psi1.psi[j] + beta * psi2.psi[j];

    for (const Scheme scheme : {Scheme::split_step, Scheme::crank_nicolson}) {
      auto a = psi1, b = psi2, c = combo;
      if (scheme == Scheme::split_step) {
        SplitStepPropagator prop(g, V, 2e-3, cs);
        for (int s = 0; s < 100; ++s) {
          prop.step(a);
          prop.step(b);
          prop.step(c);
        }
      } else {
        CrankNicolsonPropagator prop(g, V, 2e-3, cs);
        for (int s = 0; s < 100; ++s) {
          prop.step(a);
          prop.step(b);
          prop.step(c);
        }
      }
      double sum = 0.0;
      for (std::size_t j = 0; j < g.size(); ++j)
        sum += std::norm(c.psi[j] - alpha * a.psi[j] - beta * b.psi[j]);
      worst = std::max(worst, std::sqrt(sum * g.dx()));
    }
  }
  report(4, "evolution is linear over superpositions", worst < 1e-10,
         fmt("worst deviation %.3e < 1e-10 over 10 random pairs, both "
             "schemes",
             worst));
}

// --- criterion 5: Ehrenfest and packet spreading --------------------------

void criterion_ehrenfest() {
  const auto cs = ConstantsSet::natural();
  const SimConfig cfg{make_grid(-16.0, 16.0, 1024),
                      cs,
                      FreeSpec{},
                      InitialStateSpec{.type = InitialStateSpec::Type::gaussian,
                                       .x0 = 0.0,
                                       .p0 = 2.0,
                                       .sigma = 1.0},
                      2e-3,
                      1000,
                      0,
                      Scheme::split_step};
  const auto traj = evolve(cfg);
  const auto& last = traj.series.back();
  const double x_err = std::abs(last.x_mean - 4.0) / 4.0;
  const double var_expected = 1.0 + 1.0;  // sigma0^2 (1 + (t / 2 sigma0^2)^2)
  const double var_err = std::abs(last.x_var - var_expected) / var_expected;
  report(5, "free packet: <x> = x0 + p0 t / m and the spread law",
         x_err < 1e-6 && var_err < 1e-4,
         fmt("<x> rel err %.3e < 1e-6; var rel err %.3e < 1e-4 at t = 2",
             x_err, var_err));
}

// --- criterion 6: momentum operator ---------------------------------------

void criterion_momentum_operator() {
  const auto cs = ConstantsSet::natural();
  const auto g = make_grid(-8.0, 8.0, 256);
  const Operator1D p_op = [&](const WaveFunction& w) {
    return apply_momentum(w, cs);
  };

  double worst_residual = 0.0;
  double worst_planck = 0.0;
  const int half = static_cast<int>(g.size() / 2);
  for (int j = -half; j < half; ++j) {
    const double p = cs.hbar() * 2.0 * std::numbers::pi * j / g.length();
    const auto f = momentum_eigenfunction(g, p, cs);
    worst_residual =
        std::max(worst_residual, eigen_residual(p_op, f.samples, f.p));
    if (j != 0)
      worst_planck = std::max(
          worst_planck, std::abs(f.p * f.lambda - cs.h()) / cs.h());
  }

  double worst_consistency = 0.0;
  for (std::uint64_t seed = 1; seed <= 5; ++seed)
    worst_consistency =
        std::max(worst_consistency,
                 momentum_squared_consistency(random_state(g, seed), cs));

  report(6, "momentum operator: eigenpairs, p lambda = h, p^2 route",
         worst_residual < 1e-10 && worst_planck < 1e-12 &&
             worst_consistency < 1e-12,
         fmt("max residual %.3e < 1e-10 over all %d modes; max |p l - h|/h "
             "%.3e < 1e-12; p^2 mismatch %.3e < 1e-12",
             worst_residual, 2 * half, worst_planck, worst_consistency));
}

// --- criterion 7: uncertainty product --------------------------------------

void criterion_uncertainty() {
  const auto cs = ConstantsSet::natural();
  const auto g = make_grid(-16.0, 16.0, 512);
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> center(-3.0, 3.0);
  std::uniform_real_distribution<double> momentum(-3.0, 3.0);
  std::uniform_real_distribution<double> width(0.5, 2.0);

  double lowest_margin = 1e300;
  for (int i = 0; i < 50; ++i) {
    auto state = gaussian_packet(g, center(rng), momentum(rng), width(rng),
                                 cs);
    if (i % 2 == 1) {
      const auto other = gaussian_packet(g, center(rng), momentum(rng),
                                         width(rng), cs);
      for (std::size_t j = 0; j < state.psi.size(); ++j)
        state.psi[j] += other.psi[j];
      state = normalize(state);
    }
    const auto r = observable_report(state, cs);
    lowest_margin =
        std::min(lowest_margin, r.uncertainty_product - 0.5 * cs.hbar());
  }

  const auto gauss = gaussian_packet(g, 0.3, -1.2, 0.9, cs);
  const auto r = observable_report(gauss, cs);
  const double gauss_rel =
      std::abs(r.uncertainty_product - 0.5 * cs.hbar()) / (0.5 * cs.hbar());

  report(7, "dx dp >= hbar/2 on 50 states; Gaussian saturates it",
         lowest_margin > -1e-9 && gauss_rel < 1e-6,
         fmt("lowest margin above hbar/2: %.3e > -1e-9; Gaussian rel dev "
             "%.3e < 1e-6",
             lowest_margin, gauss_rel));
}

// --- criterion 8: Bohr / Rydberg -------------------------------------------

void criterion_bohr_rydberg() {
  const auto si = ConstantsSet::si();
  const double r_codata = 1.0973731568e7;

  const double r_derived = derived_rydberg_constant(si);
  const double r_err = std::abs(r_derived - r_codata) / r_codata;

  const double e1_ev = bohr_state(1, si).E_n / si.ev();
  const double e1_err = std::abs(e1_ev - (-13.6057)) / 13.6057;

  const double balmer_alpha = transition(3, 2, si).lambda;
  const double balmer_expected = 36.0 / (5.0 * r_codata);
  const double balmer_err =
      std::abs(balmer_alpha - balmer_expected) / balmer_expected;

  double worst_cross = 0.0;
  for (int m = 1; m <= 9; ++m)
    for (int n = m + 1; n <= 10; ++n) {
      const double via_levels = transition(n, m, si).lambda;
      const double via_formula = rydberg_wavelength(m, n, r_derived);
      worst_cross = std::max(
          worst_cross, std::abs(via_levels - via_formula) / via_formula);
    }

  report(8, "Bohr levels reproduce the Rydberg spectrum",
         r_err < 1e-4 && e1_err < 1e-4 && balmer_err < 5e-4 &&
             worst_cross < 1e-10,
         fmt("R rel err %.2e < 1e-4; E_1 rel err %.2e < 1e-4; 3->2 line rel "
             "err %.2e < 5e-4; cross-consistency %.2e < 1e-10",
             r_err, e1_err, balmer_err, worst_cross));
}

// --- criterion 9: force balance and quantization ---------------------------

void criterion_force_balance() {
  const auto si = ConstantsSet::si();
  double worst_force = 0.0;
  double worst_l = 0.0;
  for (int n = 1; n <= 50; ++n) {
    const auto s = bohr_state(n, si);
    const double fc =
        coulomb_force(si.e_charge(), si.e_charge(), s.r_n, si);
    const double fp = centripetal_force(si.m_e(), s.v_n, s.r_n);
    worst_force = std::max(worst_force, std::abs(fc - fp) / fc);
    worst_l = std::max(worst_l, std::abs(s.L_n / si.hbar() - n) / n);
  }
  report(9, "Coulomb/centripetal balance and L = n hbar for n in [1,50]",
         worst_force < 1e-10 && worst_l < 1e-12,
         fmt("force rel err %.3e < 1e-10; L rel err %.3e < 1e-12",
             worst_force, worst_l));
}

// --- criterion 10: photoelectric -------------------------------------------

void criterion_photoelectric() {
  const auto si = ConstantsSet::si();
  const double phi = 2.30 * si.ev();

  const double f = 8.0e14;
  const double photon = photon_energy(f, si);
  const auto emitted = photoelectric_from_frequency(f, phi, si);
  const bool ke_exact =
      emitted.emitted && *emitted.ke_max == photon - phi;

  const double f0 = emitted.threshold_frequency;
  const double f0_err = std::abs(f0 - phi / si.h()) / (phi / si.h());

  const auto boundary = photoelectric_from_energy(phi, phi, si);

  report(10, "photoelectric: ke_max = hf - phi, threshold phi/h, boundary",
         ke_exact && f0_err < 1e-12 && !boundary.emitted &&
             !boundary.ke_max.has_value(),
         fmt("ke_max exact: %s; f0 rel err %.2e < 1e-12; E = phi emits "
             "nothing: %s",
             ke_exact ? "yes" : "no", f0_err,
             boundary.emitted ? "violated" : "honored"));
}

// --- criterion 11: double slit ---------------------------------------------

void criterion_double_slit() {
  DoubleSlitConfig cfg{
      .grid = make_grid_2d(-20.0, 28.0, 256, -20.0, 20.0, 256),
      .constants = ConstantsSet::natural(),
      .slit = DoubleSlitSpec{.barrier_height = 320.0,
                             .barrier_x = 0.0,
                             .barrier_thickness = 0.75,
                             .slit_separation = 4.0625,
                             .slit_width = 1.4},
      .x0 = -8.0,
      .y0 = 0.0,
      .p0 = 8.0,
      .sigma_x = 1.5,
      .sigma_y = 4.0,
      .dt = 7.5e-4,
      .steps = 4000,
      .screen_x = 12.0,
      .min_transmitted = 0.01};

  const auto both = double_slit_run(cfg);
  const auto fringes = analyze_fringes(both.profile);
  const double dy = both.profile.y[1] - both.profile.y[0];
  const double spacing_err =
      std::abs(fringes.spacing_estimate - fringes.predicted_spacing) /
      fringes.predicted_spacing;

  auto single_cfg = cfg;
  single_cfg.slit.slit_width_lower = 0.0;
  const auto single = double_slit_run(single_cfg);
  const auto single_fringes = analyze_fringes(single.profile);

  report(11, "double slit: central fringe, lambda D / d spacing, control",
         fringes.maxima_y.size() >= 3 &&
             std::abs(fringes.central_y) < 2.0 * dy && spacing_err < 0.05 &&
             single_fringes.maxima_y.size() == 1,
         fmt("%zu maxima, central at |y| = %.3f < %.3f, spacing rel err "
             "%.2e < 5e-2; single-slit maxima: %zu",
             fringes.maxima_y.size(), std::abs(fringes.central_y), 2.0 * dy,
             spacing_err, single_fringes.maxima_y.size()));
}

// --- criterion 12: scheme convergence --------------------------------------

void criterion_convergence() {
  const auto cs = ConstantsSet::natural();
  const auto g = make_grid(-16.0, 16.0, 4096);
  const auto V = build_potential(HarmonicSpec{1.0}, g, cs);
  const double t_final = 2.0;

  std::vector<double> gaps;
  for (const double dt : {0.1, 0.05, 0.025, 0.0125}) {
    auto ss = gaussian_packet(g, 1.5, 0.0, std::sqrt(0.5), cs);
    auto cn = ss;
    const long steps = std::lround(t_final / dt);
    SplitStepPropagator sp(g, V, dt, cs);
    CrankNicolsonPropagator cp(g, V, dt, cs);
    for (long s = 0; s < steps; ++s) {
      sp.step(ss);
      cp.step(cn);
    }
    gaps.push_back(l2_gap(ss, cn));
  }

  double min_order = 1e300;
  std::string orders;
  for (std::size_t i = 0; i + 1 < gaps.size(); ++i) {
    const double order = std::log2(gaps[i] / gaps[i + 1]);
    min_order = std::min(min_order, order);
    orders += fmt("%.2f ", order);
  }
  report(12, "split-step / Crank-Nicolson gap shrinks at order >= 1.8",
         min_order >= 1.8,
         fmt("orders under dt halving: %s(min %.2f >= 1.8)", orders.c_str(),
             min_order));
}

// --- criterion 13: CLI round trips -----------------------------------------

int run_cli(const std::string& args, const fs::path& log) {
  const std::string cmd = std::string(WAVELAB_CLI_PATH) + " " + args + " > " +
                          log.string() + " 2>&1";
  const int status = std::system(cmd.c_str());
  return status == -1 ? -1 : WEXITSTATUS(status);
}

void criterion_cli() {
  const auto dir =
      fs::temp_directory_path() / ("wavelab_acceptance_" +
                                   std::to_string(::getpid()));
  fs::remove_all(dir);
  fs::create_directories(dir);
  const fs::path log = dir / "log.txt";

  // Binary snapshot round trip, bit-exact.
  const auto cs = ConstantsSet::natural();
  const auto g = make_grid(-8.0, 8.0, 256);
  const auto wf = gaussian_packet(g, 0.4, 1.7, 0.8, cs);
  const auto snap = (dir / "state.wvlb").string();
  write_snapshot_binary(snap, wf);
  const auto back = std::get<WaveFunction>(read_snapshot_binary(snap));
  const bool bits_equal =
      back.grid == wf.grid && back.t == wf.t &&
      std::memcmp(back.psi.data(), wf.psi.data(),
                  wf.psi.size() * sizeof(cplx)) == 0;

  // Valid config: exit 0 and a manifest that re-parses equivalently.
  const std::string config_text = R"([grid]
xmin = -8
xmax = 8
n = 64

[time]
dt = 0.001
steps = 10
snapshot_every = 0

[initial]
type = gaussian
sigma = 1

[potential]
type = free
)";
  const auto config = dir / "run.ini";
  {
    std::ofstream out(config);
    out << config_text;
  }
  const int ok = run_cli("evolve " + config.string() + " --output-dir " +
                             (dir / "out").string(),
                         log);
  bool manifest_ok = false;
  if (ok == 0) {
    const RunConfig original = parse_run_config(config.string());
    const RunConfig echoed =
        parse_run_config((dir / "out" / "manifest.ini").string());
    manifest_ok = render_run_config(echoed) == render_run_config(original);
  }

  // Two invalid configs: exit 2 both times.
  const auto broken1 = dir / "broken1.ini";
  {
    std::ofstream out(broken1);
    out << "[grid]\nxmin = -8\nxmax = 8\nn = 64\n[initial]\ntype = gaussian\n"
           "sigma = 1\n[potential]\ntype = free\n";  // no [time]
  }
  const auto broken2 = dir / "broken2.ini";
  {
    std::ofstream out(broken2);
    out << config_text << "\n[grid]\nwhat = 1\n";  // unknown key
  }
  const int bad1 = run_cli("evolve " + broken1.string(), log);
  const int bad2 = run_cli("evolve " + broken2.string(), log);

  report(13, "CLI: bit-exact snapshots, manifest echo, exit codes",
         bits_equal && ok == 0 && manifest_ok && bad1 == 2 && bad2 == 2,
         fmt("snapshot bit-exact: %s; valid run exit %d; manifest re-parse: "
             "%s; invalid runs exit %d, %d",
             bits_equal ? "yes" : "no", ok, manifest_ok ? "ok" : "mismatch",
             bad1, bad2));
  fs::remove_all(dir);
}

}  // namespace

int main() {
  criterion_gate();
  criterion_free_wave();
  criterion_norm_conservation();
  criterion_superposition();
  criterion_ehrenfest();
  criterion_momentum_operator();
  criterion_uncertainty();
  criterion_bohr_rydberg();
  criterion_force_balance();
  criterion_photoelectric();
  criterion_double_slit();
  criterion_convergence();
  criterion_cli();

  if (g_failures == 0)
    std::printf("all 13 acceptance criteria passed\n");
  else
    std::printf("%d acceptance criteria FAILED\n", g_failures);
  return g_failures == 0 ? 0 : 1;
}
