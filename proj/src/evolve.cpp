#include "wavelab/evolve.hpp"

#include <cmath>
#include <optional>
#include <string>

namespace wavelab {

SplitStepPropagator::SplitStepPropagator(const SpatialGrid& grid,
                                         const Potential& potential,
                                         double dt,
                                         const ConstantsSet& constants)
    : grid_(grid), fft_(grid.size()), dt_(dt) {
  if (potential.values.size() != grid.size())
    throw GridMismatch("potential does not match grid");
  const double hbar = constants.hbar();
  const double m = constants.m_e();
  half_potential_phase_.resize(grid.size());
  kinetic_phase_.resize(grid.size());
  for (std::size_t j = 0; j < grid.size(); ++j)
    half_potential_phase_[j] =
        std::polar(1.0, -potential.values[j] * dt / (2.0 * hbar));
  for (std::size_t m_idx = 0; m_idx < grid.size(); ++m_idx) {
    const double k = grid.wavenumber(m_idx);
    kinetic_phase_[m_idx] = std::polar(1.0, -hbar * k * k * dt / (2.0 * m));
  }
}

void SplitStepPropagator::step(WaveFunction& wf) {
  if (!(wf.grid == grid_))
    throw GridMismatch("state grid does not match propagator grid");
  auto& psi = wf.psi;
  for (std::size_t j = 0; j < psi.size(); ++j)
    psi[j] *= half_potential_phase_[j];
  fft_.forward(psi);
  for (std::size_t m = 0; m < psi.size(); ++m) psi[m] *= kinetic_phase_[m];
  fft_.inverse(psi);
  for (std::size_t j = 0; j < psi.size(); ++j)
    psi[j] *= half_potential_phase_[j];
  wf.t += dt_;
}

CrankNicolsonPropagator::CrankNicolsonPropagator(const SpatialGrid& grid,
                                                 const Potential& potential,
                                                 double dt,
                                                 const ConstantsSet& constants)
    : grid_(grid), dt_(dt) {
  if (potential.values.size() != grid.size())
    throw GridMismatch("potential does not match grid");
  const std::size_t n = grid.size();
  const double hbar = constants.hbar();
  const double m = constants.m_e();
  const double dx = grid.dx();
  const cplx imu(0.0, dt / (2.0 * hbar));

  // H = -hbar^2/2m D2 + diag(V): constant off-diagonal, varying diagonal.
  const double h_off = -hbar * hbar / (2.0 * m * dx * dx);
  off_ = imu * h_off;
  rhs_off_ = -off_;

  std::vector<cplx> diag(n);
  rhs_diag_.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double h_diag = hbar * hbar / (m * dx * dx) + potential.values[j];
    diag[j] = 1.0 + imu * h_diag;
    rhs_diag_[j] = 1.0 - imu * h_diag;
  }

  // Fold the periodic corners into a rank-one update A = T + u v^T with
  // u = (gamma, 0, ..., 0, off)^T and v = (1, 0, ..., 0, off/gamma)^T.
  const cplx gamma = -diag[0];
  corner_over_gamma_ = off_ / gamma;
  std::vector<cplx> t_diag = diag;
  t_diag[0] -= gamma;
  t_diag[n - 1] -= off_ * corner_over_gamma_;

  // Thomas factorization of T (constant off-diagonals off_).
  multipliers_.assign(n, cplx(0.0));
  inv_pivots_.assign(n, cplx(0.0));
  cplx pivot = t_diag[0];
  inv_pivots_[0] = 1.0 / pivot;
  for (std::size_t j = 1; j < n; ++j) {
    multipliers_[j] = off_ * inv_pivots_[j - 1];
    pivot = t_diag[j] - multipliers_[j] * off_;
    inv_pivots_[j] = 1.0 / pivot;
  }

  // z = T^{-1} u and the Sherman-Morrison denominator 1 + v . z.
  sm_column_.assign(n, cplx(0.0));
  sm_column_[0] = gamma;
  sm_column_[n - 1] = off_;
  solve(sm_column_);
  sm_denominator_ =
      1.0 + sm_column_[0] + corner_over_gamma_ * sm_column_[n - 1];

  scratch_.resize(n);
}

// In-place Thomas solve of T x = b using the stored factorization.
void CrankNicolsonPropagator::solve(std::vector<cplx>& x) const {
  const std::size_t n = x.size();
  for (std::size_t j = 1; j < n; ++j) x[j] -= multipliers_[j] * x[j - 1];
  x[n - 1] *= inv_pivots_[n - 1];
  for (std::size_t j = n - 1; j-- > 0;)
    x[j] = (x[j] - off_ * x[j + 1]) * inv_pivots_[j];
}

void CrankNicolsonPropagator::step(WaveFunction& wf) {
  if (!(wf.grid == grid_))
    throw GridMismatch("state grid does not match propagator grid");
  const std::size_t n = wf.psi.size();
  const auto& psi = wf.psi;

  // Right-hand side b = (I - i mu H) psi with periodic wrap.
  auto& b = scratch_;
  for (std::size_t j = 0; j < n; ++j) {
    const cplx left = psi[j == 0 ? n - 1 : j - 1];
    const cplx right = psi[j + 1 == n ? 0 : j + 1];
    b[j] = rhs_diag_[j] * psi[j] + rhs_off_ * (left + right);
  }

  solve(b);
  const cplx correction =
      (b[0] + corner_over_gamma_ * b[n - 1]) / sm_denominator_;
  for (std::size_t j = 0; j < n; ++j)
    wf.psi[j] = b[j] - correction * sm_column_[j];
  wf.t += dt_;
}

WaveFunction split_step(const WaveFunction& wf, const Potential& potential,
                        double dt, const ConstantsSet& constants) {
  if (dt == 0.0) return wf;
  WaveFunction out = wf;
  SplitStepPropagator prop(wf.grid, potential, dt, constants);
  prop.step(out);
  return out;
}

WaveFunction crank_nicolson_step(const WaveFunction& wf,
                                 const Potential& potential, double dt,
                                 const ConstantsSet& constants) {
  if (dt == 0.0) return wf;
  WaveFunction out = wf;
  CrankNicolsonPropagator prop(wf.grid, potential, dt, constants);
  prop.step(out);
  return out;
}

WaveFunction build_initial_state(const InitialStateSpec& spec,
                                 const SpatialGrid& grid,
                                 const ConstantsSet& constants) {
  switch (spec.type) {
    case InitialStateSpec::Type::gaussian:
      return gaussian_packet(grid, spec.x0, spec.p0, spec.sigma, constants);
    case InitialStateSpec::Type::plane_wave:
      return plane_wave_box(grid, spec.mode, 0.0, 0.0);
  }
  throw Error("unknown initial state type");
}

Trajectory evolve(const SimConfig& config) {
  if (!(config.dt > 0.0))
    throw Error("time step must be positive, got " +
                std::to_string(config.dt));
  if (config.steps < 1)
    throw Error("step count must be at least 1, got " +
                std::to_string(config.steps));
  if (config.snapshot_every < 0 ||
      (config.snapshot_every > 0 && config.steps % config.snapshot_every != 0))
    throw SnapshotScheduleInvalid(
        "snapshot_every must be 0 (final only) or divide steps");

  const Potential potential =
      build_potential(config.potential, config.grid, config.constants);
  WaveFunction state =
      build_initial_state(config.initial, config.grid, config.constants);

  std::optional<SplitStepPropagator> split;
  std::optional<CrankNicolsonPropagator> cn;
  if (config.scheme == Scheme::split_step)
    split.emplace(config.grid, potential, config.dt, config.constants);
  else
    cn.emplace(config.grid, potential, config.dt, config.constants);

  FourierWorkspace obs_fft(config.grid.size());
  Trajectory traj;
  traj.series.reserve(static_cast<std::size_t>(config.steps) + 1);

  const auto record = [&](const WaveFunction& wf) {
    const ObservableReport r =
        observable_report(wf, config.constants, &potential, obs_fft);
    traj.series.push_back(ObservableSample{wf.t, r.norm, r.x_mean, r.p_mean,
                                           r.x_var, r.p_var, r.kinetic_energy,
                                           r.potential_energy,
                                           r.total_energy});
  };

  record(state);
  if (config.snapshot_every > 0) traj.snapshots.push_back(state);

  for (long step = 1; step <= config.steps; ++step) {
    if (split)
      split->step(state);
    else
      cn->step(state);
    record(state);
    const bool take_snapshot = config.snapshot_every > 0
                                   ? step % config.snapshot_every == 0
                                   : step == config.steps;
    if (take_snapshot) traj.snapshots.push_back(state);
  }
  return traj;
}

}  // namespace wavelab
