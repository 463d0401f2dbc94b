#include "wavelab/constants.hpp"

#include <numbers>

namespace wavelab {
namespace {

// CODATA-2018 values, 10 significant digits. h, c and e are exact by the
// 2019 SI redefinition; m_e, eps0 and m_p are measured.
constexpr double kPlanck = 6.626070150e-34;        // J s
constexpr double kSpeedOfLight = 2.997924580e8;    // m / s
constexpr double kElementaryCharge = 1.602176634e-19;  // C
constexpr double kElectronMass = 9.109383702e-31;  // kg
constexpr double kVacuumPermittivity = 8.854187813e-12;  // F / m
constexpr double kProtonMass = 1.672621924e-27;    // kg
constexpr double kJoulesPerEv = 1.602176634e-19;   // J / eV

constexpr double kTwoPi = 2.0 * std::numbers::pi;

}  // namespace

ConstantsSet ConstantsSet::natural() {
  ConstantsSet cs;
  cs.system_ = UnitSystem::natural;
  cs.hbar_ = 1.0;
  cs.h_ = kTwoPi;
  cs.m_e_ = 1.0;
  return cs;
}

ConstantsSet ConstantsSet::si() {
  ConstantsSet cs;
  cs.system_ = UnitSystem::si;
  cs.h_ = kPlanck;
  cs.hbar_ = kPlanck / kTwoPi;
  cs.m_e_ = kElectronMass;
  cs.c_ = kSpeedOfLight;
  cs.e_charge_ = kElementaryCharge;
  cs.eps0_ = kVacuumPermittivity;
  cs.k_e_ = 1.0 / (4.0 * std::numbers::pi * kVacuumPermittivity);
  cs.a0_ = cs.hbar_ * cs.hbar_ /
           (cs.m_e_ * cs.e_charge_ * cs.e_charge_ * cs.k_e_);
  cs.rydberg_inf_ = cs.k_e_ * cs.e_charge_ * cs.e_charge_ /
                    (2.0 * cs.a0_ * cs.h_ * cs.c_);
  cs.rydberg_hydrogen_ = cs.rydberg_inf_ / (1.0 + kElectronMass / kProtonMass);
  cs.ev_ = kJoulesPerEv;
  return cs;
}

ConstantsSet ConstantsSet::with_particle(double hbar, double mass) const {
  if (system_ != UnitSystem::natural)
    throw NaturalUnitsUnsupported(
        "particle overrides are only meaningful in natural units");
  if (hbar <= 0.0 || mass <= 0.0)
    throw Error("hbar and mass overrides must be positive");
  ConstantsSet cs = *this;
  cs.hbar_ = hbar;
  cs.h_ = kTwoPi * hbar;
  cs.m_e_ = mass;
  return cs;
}

ConstantsSet constants(UnitSystem system) {
  return system == UnitSystem::natural ? ConstantsSet::natural()
                                       : ConstantsSet::si();
}

}  // namespace wavelab
