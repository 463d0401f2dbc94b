#ifndef WAVELAB_OLDQUANTUM_HPP
#define WAVELAB_OLDQUANTUM_HPP

#include <optional>

#include "wavelab/constants.hpp"

namespace wavelab {

/// Circular electron orbit with quantized angular momentum L = n hbar.
/// All quantities follow from balancing the Coulomb attraction against the
/// centripetal force: r_n = n^2 a0, E_n = -k_e e^2 / (2 n^2 a0),
/// v_n = n hbar / (m r_n). Energies use the infinite-nuclear-mass electron.
struct BohrState {
  int n = 1;
  double r_n = 0.0;  // m
  double E_n = 0.0;  // J, negative (bound)
  double v_n = 0.0;  // m/s
  double L_n = 0.0;  // J s
};

/// Photon emitted by a jump from orbit n_upper to n_lower. The photon
/// energy is the level gap |E_upper - E_lower|; frequency and vacuum
/// wavelength follow from E = h f and lambda f = c.
struct SpectralLine {
  int n_upper = 2;
  int n_lower = 1;
  double E_gamma = 0.0;    // J
  double frequency = 0.0;  // Hz
  double lambda = 0.0;     // m, vacuum
};

/// Photoemission bookkeeping: an electron escapes only when the photon
/// energy strictly exceeds the metal's work function.
struct PhotoelectricResult {
  double photon_energy = 0.0;        // J
  double work_function = 0.0;        // J
  double threshold_frequency = 0.0;  // Hz, phi / h
  bool emitted = false;
  std::optional<double> ke_max;  // J, present only when emitted
};

/// E = h f (equivalently hbar omega).
double photon_energy(double frequency, const ConstantsSet& constants);
double photon_energy_from_omega(double omega, const ConstantsSet& constants);

/// k_e q1 q2 / r^2.
double coulomb_force(double q1, double q2, double r,
                     const ConstantsSet& constants);

/// m v^2 / r.
double centripetal_force(double mass, double speed, double r);

BohrState bohr_state(int n, const ConstantsSet& constants);

/// 1 / lambda = R (1/m^2 - 1/n^2) for m_lower < n_upper.
double rydberg_wavelength(int m_lower, int n_upper, double rydberg_constant);

SpectralLine transition(int n_upper, int n_lower,
                        const ConstantsSet& constants);

/// R = k_e e^2 / (2 a0 h c), the Rydberg constant as the Bohr level
/// spacing expresses it.
double derived_rydberg_constant(const ConstantsSet& constants);

PhotoelectricResult photoelectric_from_energy(double photon_energy,
                                              double work_function,
                                              const ConstantsSet& constants);
PhotoelectricResult photoelectric_from_frequency(double frequency,
                                                 double work_function,
                                                 const ConstantsSet& constants);

}  // namespace wavelab

#endif  // WAVELAB_OLDQUANTUM_HPP
