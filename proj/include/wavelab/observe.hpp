#ifndef WAVELAB_OBSERVE_HPP
#define WAVELAB_OBSERVE_HPP

#include <functional>
#include <optional>
#include <vector>

#include "wavelab/fft.hpp"
#include "wavelab/potential.hpp"
#include "wavelab/wavefunction.hpp"

namespace wavelab {

/// Born-rule summary of a state. All quadratic forms use the Riemann weight
/// dx on the periodic grid. Entries other than norm assume a normalized
/// state; callers should check norm before trusting the rest (the library
/// reports rather than rejects, so a drifted norm is visible, not hidden).
struct ObservableReport {
  double norm = 0.0;
  double x_mean = 0.0;
  double x_var = 0.0;
  double p_mean = 0.0;
  double p_var = 0.0;
  double kinetic_energy = 0.0;
  double potential_energy = 0.0;
  double total_energy = 0.0;
  double uncertainty_product = 0.0;  // sqrt(x_var * p_var)
};

/// Plane-wave momentum eigenstate on the box, f_p = L^(-1/2) exp(i p x / hbar),
/// with its de Broglie wavelength 2 pi hbar / p.
struct MomentumEigenfunction {
  double p = 0.0;
  cplx amplitude;       // L^(-1/2)
  double lambda = 0.0;  // +inf for p = 0
  WaveFunction samples;
};

using Operator1D = std::function<WaveFunction(const WaveFunction&)>;

/// Probability of finding the particle in [a, b]: the |psi|^2 integral with
/// linear interpolation of the density at non-sample endpoints. Requires
/// x_min <= a <= b <= x_max (a == b gives 0).
double probability(const WaveFunction& wf, double a, double b);

/// -i hbar d/dx applied spectrally: multiply coefficient m by hbar k_m.
/// Exact on band-limited states; plane_wave_box modes are exact eigenstates.
WaveFunction apply_momentum(const WaveFunction& wf,
                            const ConstantsSet& constants);
WaveFunction apply_momentum(const WaveFunction& wf,
                            const ConstantsSet& constants,
                            FourierWorkspace& fft);

/// <Q> = sum_j (Q psi)_j conj(psi_j) dx, kept complex so Hermiticity
/// violations stay observable. Use expect_real to collapse it.
cplx expectation(const WaveFunction& wf, const Operator1D& op);

/// Asserts the imaginary part is negligible and returns the real part.
/// Tolerance is absolute against max(1, |z|).
double expect_real(cplx z, double tol = 1e-9);

double expectation_position(const WaveFunction& wf);
double expectation_momentum(const WaveFunction& wf,
                            const ConstantsSet& constants);
double kinetic_energy(const WaveFunction& wf, const ConstantsSet& constants);
double potential_energy(const WaveFunction& wf, const Potential& V);
double total_energy(const WaveFunction& wf, const Potential& V,
                    const ConstantsSet& constants);

/// Full report; potential omitted means V = 0.
ObservableReport observable_report(const WaveFunction& wf,
                                   const ConstantsSet& constants,
                                   const Potential* potential = nullptr);
ObservableReport observable_report(const WaveFunction& wf,
                                   const ConstantsSet& constants,
                                   const Potential* potential,
                                   FourierWorkspace& fft);

/// L2 mismatch between applying the momentum operator twice over 2m and the
/// spectral kinetic operator -hbar^2/2m d^2/dx^2. Both reduce to the same
/// multiplier (hbar k)^2 / 2m, so the result is roundoff-sized.
double momentum_squared_consistency(const WaveFunction& wf,
                                    const ConstantsSet& constants);

/// Eigenstate constructor for box-commensurate momenta p = hbar 2 pi j / L
/// with j in [-n/2, n/2). Other momenta are not exact eigenvalues on a
/// periodic grid and are rejected.
MomentumEigenfunction momentum_eigenfunction(const SpatialGrid& grid, double p,
                                             const ConstantsSet& constants);

/// ||op(f) - q f|| / ||f||.
double eigen_residual(const Operator1D& op, const WaveFunction& f, cplx q);

/// lambda = h / p = 2 pi hbar / p (signed, so the round trip is exact).
double de_broglie_wavelength(double p, const ConstantsSet& constants);
double momentum_from_wavelength(double lambda, const ConstantsSet& constants);

/// Draws position samples from |psi|^2 by inverse CDF over grid cells
/// centered on the samples (uniform within each cell), so the sampling mean
/// estimates expectation_position.
std::vector<double> sample_positions(const WaveFunction& wf,
                                     std::size_t count, std::uint64_t seed);

}  // namespace wavelab

#endif  // WAVELAB_OBSERVE_HPP
