#include "wavelab/dispersion_gate.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "wavelab/evolve.hpp"
#include "wavelab/potential.hpp"

namespace wavelab {

double dispersion_omega(double k, const ConstantsSet& constants) {
  return constants.hbar() * k * k / (2.0 * constants.m_e());
}

TrialGamma trial_gamma(CandidateEquation candidate, double k,
                       const ConstantsSet& constants) {
  if (k == 0.0)
    throw ZeroWavenumber("gamma is undefined at k = 0");
  const double omega = dispersion_omega(k, constants);
  switch (candidate) {
    case CandidateEquation::second_order_time:
      // -omega^2 = gamma (ik)^2
      return {candidate, k, cplx(omega * omega / (k * k), 0.0)};
    case CandidateEquation::first_order_time:
      // -i omega = gamma (ik)^2
      return {candidate, k, cplx(0.0, omega / (k * k))};
  }
  throw Error("unknown candidate equation");
}

namespace {

GateReport evaluate_candidate(CandidateEquation candidate,
                              std::span<const double> ks,
                              const ConstantsSet& constants,
                              double tolerance) {
  GateReport report;
  report.candidate = candidate;
  report.tolerance = tolerance;
  for (double k : ks)
    report.gamma_samples.push_back(trial_gamma(candidate, k, constants));

  double spread = 0.0;
  for (std::size_t i = 0; i < report.gamma_samples.size(); ++i)
    for (std::size_t j = i + 1; j < report.gamma_samples.size(); ++j)
      spread = std::max(spread,
                        std::abs(report.gamma_samples[i].gamma -
                                 report.gamma_samples[j].gamma));
  report.max_pairwise_spread = spread;
  report.k_independent = spread < tolerance;
  return report;
}

}  // namespace

std::pair<GateReport, GateReport> run_gate(std::span<const double> k_samples,
                                           const ConstantsSet& constants,
                                           double tolerance) {
  std::vector<double> distinct;
  for (double k : k_samples) {
    if (k == 0.0) throw ZeroWavenumber("gate samples must be nonzero");
    if (std::find(distinct.begin(), distinct.end(), k) == distinct.end())
      distinct.push_back(k);
  }
  if (distinct.size() < 2)
    throw InsufficientSamples(
        "gate needs at least two distinct nonzero wavenumbers, got " +
        std::to_string(distinct.size()));

  return {evaluate_candidate(CandidateEquation::second_order_time, distinct,
                             constants, tolerance),
          evaluate_candidate(CandidateEquation::first_order_time, distinct,
                             constants, tolerance)};
}

double free_evolution_residual(const SpatialGrid& grid, int mode_index,
                               double t, long steps,
                               const ConstantsSet& constants,
                               std::optional<double> reference_omega) {
  if (steps < 1) throw Error("free evolution needs at least one step");
  const double k =
      2.0 * std::numbers::pi * static_cast<double>(mode_index) / grid.length();
  const double omega = dispersion_omega(k, constants);

  WaveFunction state = plane_wave_box(grid, mode_index, 0.0, omega);
  const Potential free_potential =
      build_potential(FreeSpec{}, grid, constants);
  SplitStepPropagator prop(grid, free_potential, t / static_cast<double>(steps),
                           constants);
  for (long s = 0; s < steps; ++s) prop.step(state);

  const WaveFunction reference =
      plane_wave_box(grid, mode_index, t, reference_omega.value_or(omega));
  double sum = 0.0;
  for (std::size_t j = 0; j < state.psi.size(); ++j)
    sum += std::norm(state.psi[j] - reference.psi[j]);
  return std::sqrt(sum * grid.dx());
}

}  // namespace wavelab
