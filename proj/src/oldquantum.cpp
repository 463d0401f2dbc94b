#include "wavelab/oldquantum.hpp"

#include <cmath>
#include <string>

namespace wavelab {
namespace {

void require_si(const ConstantsSet& constants, const char* what) {
  if (constants.unit_system() != UnitSystem::si)
    throw NaturalUnitsUnsupported(std::string(what) +
                                  " requires SI constants");
}

}  // namespace

double photon_energy(double frequency, const ConstantsSet& constants) {
  if (!(frequency > 0.0))
    throw NonPositiveFrequency("photon frequency must be positive, got " +
                               std::to_string(frequency));
  return constants.h() * frequency;
}

double photon_energy_from_omega(double omega, const ConstantsSet& constants) {
  if (!(omega > 0.0))
    throw NonPositiveFrequency("angular frequency must be positive, got " +
                               std::to_string(omega));
  return constants.hbar() * omega;
}

double coulomb_force(double q1, double q2, double r,
                     const ConstantsSet& constants) {
  if (!(r > 0.0))
    throw NonPositiveRadius("separation must be positive, got " +
                            std::to_string(r));
  return constants.k_e() * q1 * q2 / (r * r);
}

double centripetal_force(double mass, double speed, double r) {
  if (!(r > 0.0))
    throw NonPositiveRadius("orbit radius must be positive, got " +
                            std::to_string(r));
  return mass * speed * speed / r;
}

BohrState bohr_state(int n, const ConstantsSet& constants) {
  require_si(constants, "bohr_state");
  if (n < 1)
    throw NonPositiveQuantumNumber("quantum number must be >= 1, got " +
                                   std::to_string(n));
  const double hbar = constants.hbar();
  const double m = constants.m_e();
  const double nn = static_cast<double>(n);

  BohrState s;
  s.n = n;
  s.r_n = nn * nn * constants.a0();
  s.E_n = -constants.k_e() * constants.e_charge() * constants.e_charge() /
          (2.0 * nn * nn * constants.a0());
  s.v_n = nn * hbar / (m * s.r_n);
  s.L_n = m * s.v_n * s.r_n;
  return s;
}

double rydberg_wavelength(int m_lower, int n_upper, double rydberg_constant) {
  if (m_lower < 1 || n_upper <= m_lower)
    throw BadQuantumNumbers("need 1 <= m_lower < n_upper, got m = " +
                            std::to_string(m_lower) + ", n = " +
                            std::to_string(n_upper));
  if (!(rydberg_constant > 0.0))
    throw Error("Rydberg constant must be positive");
  const double ml = static_cast<double>(m_lower);
  const double nu = static_cast<double>(n_upper);
  const double inv_lambda =
      rydberg_constant * (1.0 / (ml * ml) - 1.0 / (nu * nu));
  return 1.0 / inv_lambda;
}

SpectralLine transition(int n_upper, int n_lower,
                        const ConstantsSet& constants) {
  require_si(constants, "transition");
  if (n_lower < 1 || n_upper <= n_lower)
    throw BadQuantumNumbers("need 1 <= n_lower < n_upper, got lower = " +
                            std::to_string(n_lower) + ", upper = " +
                            std::to_string(n_upper));
  const BohrState upper = bohr_state(n_upper, constants);
  const BohrState lower = bohr_state(n_lower, constants);

  SpectralLine line;
  line.n_upper = n_upper;
  line.n_lower = n_lower;
  // Bound-state energies are negative; the emitted photon carries the gap.
  line.E_gamma = std::abs(upper.E_n - lower.E_n);
  line.frequency = line.E_gamma / constants.h();
  line.lambda = constants.c() / line.frequency;
  return line;
}

double derived_rydberg_constant(const ConstantsSet& constants) {
  require_si(constants, "derived_rydberg_constant");
  return constants.k_e() * constants.e_charge() * constants.e_charge() /
         (2.0 * constants.a0() * constants.h() * constants.c());
}

PhotoelectricResult photoelectric_from_energy(double photon_energy,
                                              double work_function,
                                              const ConstantsSet& constants) {
  if (!(work_function > 0.0))
    throw NonPositiveWorkFunction("work function must be positive, got " +
                                  std::to_string(work_function));
  PhotoelectricResult r;
  r.photon_energy = photon_energy;
  r.work_function = work_function;
  r.threshold_frequency = work_function / constants.h();
  r.emitted = photon_energy > work_function;  // strict: E == phi stays bound
  if (r.emitted) r.ke_max = photon_energy - work_function;
  return r;
}

PhotoelectricResult photoelectric_from_frequency(double frequency,
                                                 double work_function,
                                                 const ConstantsSet& constants) {
  return photoelectric_from_energy(photon_energy(frequency, constants),
                                   work_function, constants);
}

}  // namespace wavelab
