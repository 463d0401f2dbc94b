#ifndef WAVELAB_DISPERSION_GATE_HPP
#define WAVELAB_DISPERSION_GATE_HPP

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "wavelab/constants.hpp"
#include "wavelab/grid.hpp"
#include "wavelab/wavefunction.hpp"

namespace wavelab {

/// The two candidate evolution equations tried against a traveling wave
/// exp(i(kx - omega t)) with the quadratic matter dispersion: a wave
/// equation that is second order in time, and one first order in time.
enum class CandidateEquation { second_order_time, first_order_time };

/// Coefficient gamma extracted by substituting the traveling wave into
/// d^a/dt^a psi = gamma d^2/dx^2 psi (a = 2 or 1).
struct TrialGamma {
  CandidateEquation candidate;
  double k = 0.0;
  cplx gamma;
};

/// Verdict for one candidate over a wavenumber sample set. A usable
/// evolution equation must have a k-independent coefficient, otherwise
/// solutions at different wavenumbers cannot be superposed under one
/// equation.
struct GateReport {
  CandidateEquation candidate;
  std::vector<TrialGamma> gamma_samples;
  double max_pairwise_spread = 0.0;
  double tolerance = 0.0;
  bool k_independent = false;
};

/// Matter-wave dispersion omega(k) = hbar k^2 / 2m, from E = p^2/2m with
/// E = hbar omega and p = hbar k.
double dispersion_omega(double k, const ConstantsSet& constants);

/// second_order_time: gamma = omega^2 / k^2 (grows as k^2, real).
/// first_order_time:  gamma = i omega / k^2 = i hbar / 2m (k-free).
TrialGamma trial_gamma(CandidateEquation candidate, double k,
                       const ConstantsSet& constants);

/// Evaluates both candidates on the samples and reports which (if either)
/// has a constant coefficient. Needs at least two distinct nonzero
/// wavenumbers; gamma is undefined at k = 0. Returns
/// {second_order report, first_order report}.
std::pair<GateReport, GateReport> run_gate(std::span<const double> k_samples,
                                           const ConstantsSet& constants,
                                           double tolerance = 1e-12);

/// Propagates a box plane-wave mode with the split-step engine for `steps`
/// steps to time t and returns the L2 distance to the analytically phased
/// wave exp(-i omega t) psi_0. reference_omega overrides the dispersion
/// omega for the analytic reference (useful for phase-mismatch checks).
double free_evolution_residual(const SpatialGrid& grid, int mode_index,
                               double t, long steps,
                               const ConstantsSet& constants,
                               std::optional<double> reference_omega = {});

}  // namespace wavelab

#endif  // WAVELAB_DISPERSION_GATE_HPP
