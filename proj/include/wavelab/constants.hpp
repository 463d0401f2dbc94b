#ifndef WAVELAB_CONSTANTS_HPP
#define WAVELAB_CONSTANTS_HPP

#include <string>

#include "wavelab/errors.hpp"

namespace wavelab {

enum class UnitSystem { natural, si };

/// Physical constants for one unit system.
///
/// SI mode pins the CODATA-2018 primaries (h, c, e exact by definition;
/// m_e, eps0 measured) and derives everything else from them, so algebraic
/// identities between constants hold to machine precision:
///   hbar = h / 2pi,  k_e = 1 / (4 pi eps0),
///   a0 = hbar^2 / (m_e e^2 k_e),  R_inf = k_e e^2 / (2 a0 h c).
///
/// Natural mode sets hbar = m_e = 1 exactly (so h = 2pi); the
/// electromagnetic and atomic-scale constants are undefined there and
/// their accessors throw NaturalUnitsUnsupported.
class ConstantsSet {
 public:
  static ConstantsSet natural();
  static ConstantsSet si();

  /// Copy with hbar and mass replaced (config-driven runs in natural-style
  /// units with a non-unit particle). Only valid in natural mode.
  ConstantsSet with_particle(double hbar, double mass) const;

  UnitSystem unit_system() const { return system_; }

  double hbar() const { return hbar_; }
  double h() const { return h_; }
  double m_e() const { return m_e_; }

  double c() const { return require_si(c_, "c"); }
  double e_charge() const { return require_si(e_charge_, "e"); }
  double k_e() const { return require_si(k_e_, "k_e"); }
  double eps0() const { return require_si(eps0_, "eps0"); }
  double a0() const { return require_si(a0_, "a0"); }
  double rydberg_inf() const { return require_si(rydberg_inf_, "R_inf"); }

  /// Reduced-mass Rydberg constant for hydrogen, R_inf / (1 + m_e/m_p).
  /// Provided for comparison against measured hydrogen lines; the Bohr-model
  /// results here use R_inf (infinite nuclear mass).
  double rydberg_hydrogen() const {
    return require_si(rydberg_hydrogen_, "R_H");
  }

  /// Joules per electronvolt.
  double ev() const { return require_si(ev_, "eV"); }

 private:
  ConstantsSet() = default;
  double require_si(double value, const char* name) const {
    if (system_ != UnitSystem::si)
      throw NaturalUnitsUnsupported(std::string(name) +
                                    " is undefined in natural units");
    return value;
  }

  UnitSystem system_ = UnitSystem::natural;
  double hbar_ = 1.0;
  double h_ = 0.0;
  double m_e_ = 1.0;
  double c_ = 0.0;
  double e_charge_ = 0.0;
  double k_e_ = 0.0;
  double eps0_ = 0.0;
  double a0_ = 0.0;
  double rydberg_inf_ = 0.0;
  double rydberg_hydrogen_ = 0.0;
  double ev_ = 0.0;
};

ConstantsSet constants(UnitSystem system);

}  // namespace wavelab

#endif  // WAVELAB_CONSTANTS_HPP
