// Photon energy, photoelectric thresholds, Bohr orbits and hydrogen lines.
//
// Reference anchors (all reproducible by hand from CODATA 2018 constants):
//   E(5e14 Hz) = h f = 3.3130e-19 J = 2.068 eV
//   Bohr ground state: E_1 = -k_e e^2 / 2 a0 = -13.6057 eV
//   Balmer alpha (3 -> 2): lambda = 36 / (5 R_inf) = 656.11 nm (vacuum)
//   R_inf = 1.0973731568e7 1/m; historical R_H = 1.0967758e7 1/m
//   Threshold: f0 = phi / h = 5.561e14 Hz at phi = 2.30 eV

#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "wavelab/oldquantum.hpp"

using namespace wavelab;

namespace {
const ConstantsSet kSi = ConstantsSet::si();
constexpr double kRydbergCodata = 1.0973731568e7;  // 1/m
}

TEST_CASE("photon energy is h f") {
  CHECK(photon_energy(1.0 / kSi.h(), kSi) ==
        doctest::Approx(1.0).epsilon(1e-15));
  CHECK(photon_energy(5.0e14, kSi) ==
        doctest::Approx(3.313035075e-19).epsilon(1e-9));
  CHECK(photon_energy(5.0e14, kSi) / kSi.ev() ==
        doctest::Approx(2.068).epsilon(1e-4));
  CHECK_THROWS_AS(photon_energy(0.0, kSi), NonPositiveFrequency);
  CHECK_THROWS_AS(photon_energy(-1.0, kSi), NonPositiveFrequency);
}

TEST_CASE("h f and hbar omega are the same energy") {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> freq(1e12, 1e16);
  for (int i = 0; i < 100; ++i) {
    const double f = freq(rng);
    const double via_f = photon_energy(f, kSi);
    const double via_omega =
        photon_energy_from_omega(2.0 * std::numbers::pi * f, kSi);
    CHECK(via_omega == doctest::Approx(via_f).epsilon(1e-15));
  }
}

TEST_CASE("Coulomb force scaling") {
  const double q = kSi.e_charge();
  const double r = 1e-10;
  const double base = coulomb_force(q, q, r, kSi);
  CHECK(coulomb_force(2.0 * q, q, r, kSi) ==
        doctest::Approx(2.0 * base).epsilon(1e-15));
  CHECK(coulomb_force(q, q, 2.0 * r, kSi) ==
        doctest::Approx(base / 4.0).epsilon(1e-15));
  CHECK_THROWS_AS(coulomb_force(q, q, 0.0, kSi), NonPositiveRadius);
  CHECK_THROWS_AS(centripetal_force(1.0, 1.0, -1.0), NonPositiveRadius);
}

TEST_CASE("Coulomb and centripetal forces balance on the ground orbit") {
  const auto s = bohr_state(1, kSi);
  // Closed-form ground-state speed: v_1 = k_e e^2 / hbar = alpha c.
  const double v1 = kSi.k_e() * kSi.e_charge() * kSi.e_charge() / kSi.hbar();
  CHECK(s.v_n == doctest::Approx(v1).epsilon(1e-12));

  const double fc = coulomb_force(kSi.e_charge(), kSi.e_charge(), s.r_n, kSi);
  const double fp = centripetal_force(kSi.m_e(), s.v_n, s.r_n);
  CHECK(std::abs(fc - fp) / fc < 1e-10);
}

TEST_CASE("Bohr orbits: radii, energies, angular momentum") {
  const auto s1 = bohr_state(1, kSi);
  CHECK(s1.r_n == doctest::Approx(kSi.a0()).epsilon(1e-15));
  CHECK(s1.E_n / kSi.ev() == doctest::Approx(-13.6057).epsilon(1e-4));
  CHECK(s1.E_n < 0.0);

  const auto s2 = bohr_state(2, kSi);
  CHECK(s2.r_n / s1.r_n == 4.0);  // n^2 scaling, exact in binary

  const auto s3 = bohr_state(3, kSi);
  CHECK(s3.E_n / s1.E_n == doctest::Approx(1.0 / 9.0).epsilon(1e-12));

  CHECK_THROWS_AS(bohr_state(0, kSi), NonPositiveQuantumNumber);
  CHECK_THROWS_AS(bohr_state(-2, kSi), NonPositiveQuantumNumber);
  CHECK_THROWS_AS(bohr_state(1, ConstantsSet::natural()),
                  NaturalUnitsUnsupported);
}

TEST_CASE("orbit invariants hold for n up to 50") {
  const auto s1 = bohr_state(1, kSi);
  for (int n = 1; n <= 50; ++n) {
    const auto s = bohr_state(n, kSi);
    // Quantized angular momentum L = n hbar.
    CHECK(s.L_n / kSi.hbar() == doctest::Approx(n).epsilon(1e-12));
    // E_n n^2 constant (scales exactly like 1/n^2).
    CHECK(s.E_n * n * n == doctest::Approx(s1.E_n).epsilon(1e-12));
    // Force balance defines every orbit.
    const double fc =
        coulomb_force(kSi.e_charge(), kSi.e_charge(), s.r_n, kSi);
    const double fp = centripetal_force(kSi.m_e(), s.v_n, s.r_n);
    CHECK(std::abs(fc - fp) / fc < 1e-10);
  }
}

TEST_CASE("Rydberg wavelengths from the empirical formula") {
  // Balmer alpha with the historical hydrogen constant: 36/(5 R_H).
  const double r_h = 1.0967758e7;
  const double lambda = rydberg_wavelength(2, 3, r_h);
  CHECK(lambda == doctest::Approx(36.0 / (5.0 * r_h)).epsilon(1e-15));
  CHECK(lambda == doctest::Approx(656.5e-9).epsilon(5e-4));

  // Series limit: n -> infinity leaves 1/(R m^2).
  CHECK(rydberg_wavelength(1, 1'000'000, kRydbergCodata) ==
        doctest::Approx(1.0 / kRydbergCodata).epsilon(1e-9));

  CHECK_THROWS_AS(rydberg_wavelength(3, 2, kRydbergCodata), BadQuantumNumbers);
  CHECK_THROWS_AS(rydberg_wavelength(2, 2, kRydbergCodata), BadQuantumNumbers);
  CHECK_THROWS_AS(rydberg_wavelength(0, 3, kRydbergCodata), BadQuantumNumbers);
}

TEST_CASE("level transitions reproduce the spectral lines") {
  const auto balmer_alpha = transition(3, 2, kSi);
  CHECK(balmer_alpha.lambda ==
        doctest::Approx(36.0 / (5.0 * kRydbergCodata)).epsilon(5e-4));

  const auto lyman_alpha = transition(2, 1, kSi);
  CHECK(lyman_alpha.E_gamma / kSi.ev() ==
        doctest::Approx(10.2043).epsilon(1e-4));
  CHECK(lyman_alpha.E_gamma ==
        doctest::Approx(kSi.h() * lyman_alpha.frequency).epsilon(1e-12));
  CHECK(lyman_alpha.lambda * lyman_alpha.frequency ==
        doctest::Approx(kSi.c()).epsilon(1e-12));

  // Adjacent-level photon energies shrink with n.
  double previous = transition(2, 1, kSi).E_gamma;
  for (int n = 3; n <= 12; ++n) {
    const double gap = transition(n, n - 1, kSi).E_gamma;
    CHECK(gap < previous);
    previous = gap;
  }

  CHECK_THROWS_AS(transition(2, 2, kSi), BadQuantumNumbers);
  CHECK_THROWS_AS(transition(1, 2, kSi), BadQuantumNumbers);
  CHECK_THROWS_AS(transition(3, 2, ConstantsSet::natural()),
                  NaturalUnitsUnsupported);
}

TEST_CASE("the Rydberg constant falls out of the level spacing") {
  const double r = derived_rydberg_constant(kSi);
  CHECK(r == doctest::Approx(kRydbergCodata).epsilon(1e-4));
  CHECK(r == doctest::Approx(kRydbergCodata).epsilon(1e-9));  // much closer

  // R ~ 1/a0: doubling a0 in the defining expression halves R.
  const double e2 = kSi.e_charge() * kSi.e_charge();
  const double with_a0 = kSi.k_e() * e2 / (2.0 * kSi.a0() * kSi.h() * kSi.c());
  const double with_2a0 =
      kSi.k_e() * e2 / (2.0 * (2.0 * kSi.a0()) * kSi.h() * kSi.c());
  CHECK(with_a0 / with_2a0 == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(r == doctest::Approx(with_a0).epsilon(1e-15));

  // Reduced-mass variant matches the historical hydrogen value.
  CHECK(kSi.rydberg_hydrogen() == doctest::Approx(1.0967758e7).epsilon(1e-6));

  CHECK_THROWS_AS(derived_rydberg_constant(ConstantsSet::natural()),
                  NaturalUnitsUnsupported);
}

TEST_CASE("transitions and the Rydberg formula agree across the ladder") {
  const double r = derived_rydberg_constant(kSi);
  for (int m = 1; m <= 9; ++m)
    for (int n = m + 1; n <= 10; ++n) {
      const double via_levels = transition(n, m, kSi).lambda;
      const double via_formula = rydberg_wavelength(m, n, r);
      CHECK(std::abs(via_levels - via_formula) / via_formula < 1e-10);
    }
}

TEST_CASE("wavelengths within a series decrease as n grows") {
  for (int m : {1, 2, 3}) {
    double previous = rydberg_wavelength(m, m + 1, kRydbergCodata);
    for (int n = m + 2; n <= m + 8; ++n) {
      const double lambda = rydberg_wavelength(m, n, kRydbergCodata);
      CHECK(lambda < previous);
      previous = lambda;
    }
  }
}

TEST_CASE("photoelectric emission bookkeeping") {
  const double ev = kSi.ev();

  const auto emitted = photoelectric_from_energy(3.0 * ev, 2.0 * ev, kSi);
  CHECK(emitted.emitted);
  REQUIRE(emitted.ke_max.has_value());
  CHECK(*emitted.ke_max == doctest::Approx(1.0 * ev).epsilon(1e-15));

  // At exactly the work function nothing escapes (strict threshold).
  const auto boundary = photoelectric_from_energy(2.0 * ev, 2.0 * ev, kSi);
  CHECK_FALSE(boundary.emitted);
  CHECK_FALSE(boundary.ke_max.has_value());

  const auto below = photoelectric_from_energy(1.5 * ev, 2.0 * ev, kSi);
  CHECK_FALSE(below.emitted);

  const auto from_f = photoelectric_from_frequency(5.0e14, 2.0 * ev, kSi);
  CHECK(from_f.photon_energy ==
        doctest::Approx(photon_energy(5.0e14, kSi)).epsilon(1e-15));

  // phi = 2.30 eV puts the threshold at 5.561e14 Hz.
  const auto sodium_ish = photoelectric_from_energy(3.0 * ev, 2.30 * ev, kSi);
  CHECK(sodium_ish.threshold_frequency ==
        doctest::Approx(5.56e14).epsilon(1e-3));
  CHECK(sodium_ish.threshold_frequency ==
        doctest::Approx(2.30 * ev / kSi.h()).epsilon(1e-15));

  CHECK_THROWS_AS(photoelectric_from_energy(1.0 * ev, 0.0, kSi),
                  NonPositiveWorkFunction);
  CHECK_THROWS_AS(photoelectric_from_energy(1.0 * ev, -2.0 * ev, kSi),
                  NonPositiveWorkFunction);
}
