#ifndef WAVELAB_EVOLVE_HPP
#define WAVELAB_EVOLVE_HPP

#include <vector>

#include "wavelab/fft.hpp"
#include "wavelab/observe.hpp"
#include "wavelab/potential.hpp"
#include "wavelab/wavefunction.hpp"

namespace wavelab {

enum class Scheme { split_step, crank_nicolson };

/// Strang-split propagator: half potential phase, exact kinetic phase in
/// Fourier space, half potential phase. Unitary by construction; the kinetic
/// factor is exact for every representable mode, so free plane waves
/// propagate without scheme error. Second order in dt for V != 0.
class SplitStepPropagator {
 public:
  SplitStepPropagator(const SpatialGrid& grid, const Potential& potential,
                      double dt, const ConstantsSet& constants);

  double dt() const { return dt_; }
  void step(WaveFunction& wf);

 private:
  SpatialGrid grid_;
  std::vector<cplx> half_potential_phase_;
  std::vector<cplx> kinetic_phase_;
  FourierWorkspace fft_;
  double dt_;
};

/// Cayley-form trapezoidal step (I + i dt H / 2 hbar) psi' =
/// (I - i dt H / 2 hbar) psi with H = -hbar^2/2m D2 + diag(V), D2 the
/// periodic second difference. The cyclic tridiagonal solve uses a rank-one
/// Sherman-Morrison correction over a Thomas factorization, precomputed once
/// per (V, dt). Unitary in exact arithmetic; second order in dt and dx.
class CrankNicolsonPropagator {
 public:
  CrankNicolsonPropagator(const SpatialGrid& grid, const Potential& potential,
                          double dt, const ConstantsSet& constants);

  double dt() const { return dt_; }
  void step(WaveFunction& wf);

 private:
  void solve(std::vector<cplx>& x) const;

  SpatialGrid grid_;
  // B = I - i mu H applied to the current state forms the right-hand side.
  std::vector<cplx> rhs_diag_;
  cplx rhs_off_;
  cplx off_;  // off-diagonal (and corner) entry of A = I + i mu H
  // Thomas factorization of the corner-free part T of A, plus the
  // Sherman-Morrison column z = T^{-1} u handling the periodic corners.
  std::vector<cplx> multipliers_;
  std::vector<cplx> inv_pivots_;
  std::vector<cplx> sm_column_;
  cplx sm_denominator_;
  cplx corner_over_gamma_;
  double dt_;
  mutable std::vector<cplx> scratch_;
};

/// Step size keeping the fastest representable mode's phase advance,
/// hbar k_max^2 dt / 2m, at or below 0.1 rad. Accuracy guidance only; both
/// schemes are unconditionally stable at any dt.
double suggested_time_step(const SpatialGrid& grid,
                           const ConstantsSet& constants);

/// One Strang-split step as a pure function; dt = 0 returns the input.
WaveFunction split_step(const WaveFunction& wf, const Potential& potential,
                        double dt, const ConstantsSet& constants);

/// One Crank-Nicolson step as a pure function; dt = 0 returns the input.
WaveFunction crank_nicolson_step(const WaveFunction& wf,
                                 const Potential& potential, double dt,
                                 const ConstantsSet& constants);

struct InitialStateSpec {
  enum class Type { gaussian, plane_wave };
  Type type = Type::gaussian;
  double x0 = 0.0;
  double p0 = 0.0;
  double sigma = 1.0;
  int mode = 0;
  // 2D beams only:
  double y0 = 0.0;
  double sigma_y = -1.0;  // negative means "same as sigma"
};

WaveFunction build_initial_state(const InitialStateSpec& spec,
                                 const SpatialGrid& grid,
                                 const ConstantsSet& constants);

struct SimConfig {
  SpatialGrid grid;
  ConstantsSet constants;
  PotentialSpec potential;
  InitialStateSpec initial;
  double dt = 1e-3;
  long steps = 1;
  long snapshot_every = 0;  // 0 keeps only the final snapshot
  Scheme scheme = Scheme::split_step;
};

/// One observable row per step (plus the initial state).
struct ObservableSample {
  double t = 0.0;
  double norm = 0.0;
  double x_mean = 0.0;
  double p_mean = 0.0;
  double x_var = 0.0;
  double p_var = 0.0;
  double kinetic = 0.0;
  double potential = 0.0;
  double total = 0.0;
};

struct Trajectory {
  std::vector<WaveFunction> snapshots;
  std::vector<ObservableSample> series;
};

/// Runs the configured scheme for config.steps steps, recording the
/// observable series every step and snapshots on the configured cadence
/// (always including t = 0 when snapshot_every > 0, always the final state).
Trajectory evolve(const SimConfig& config);

}  // namespace wavelab

#endif  // WAVELAB_EVOLVE_HPP
