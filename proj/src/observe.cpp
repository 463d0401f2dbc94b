#include "wavelab/observe.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <string>

namespace wavelab {
namespace {

// Density integral over one cell [x_j, x_j + s], 0 <= s <= dx, with |psi|^2
// interpolated linearly between samples (right neighbor wraps).
double partial_cell_integral(const std::vector<double>& rho, std::size_t j,
                             double s, double dx, std::size_t n) {
  const double rho_l = rho[j];
  const double rho_r = rho[(j + 1) % n];
  const double slope = (rho_r - rho_l) / dx;
  return rho_l * s + 0.5 * slope * s * s;
}

std::vector<double> density(const WaveFunction& wf) {
  std::vector<double> rho(wf.psi.size());
  for (std::size_t j = 0; j < rho.size(); ++j) rho[j] = std::norm(wf.psi[j]);
  return rho;
}

}  // namespace

double probability(const WaveFunction& wf, double a, double b) {
  const auto& g = wf.grid;
  if (a < g.x_min() || b > g.x_max())
    throw IntervalOutOfGrid("interval [" + std::to_string(a) + ", " +
                            std::to_string(b) + "] outside grid span [" +
                            std::to_string(g.x_min()) + ", " +
                            std::to_string(g.x_max()) + "]");
  if (a > b)
    throw ReversedInterval("probability interval requires a <= b");
  if (a == b) return 0.0;

  const std::size_t n = g.size();
  const double dx = g.dx();
  const std::vector<double> rho = density(wf);

  // Cell index and offset of each endpoint.
  const auto locate = [&](double v) {
    auto j = static_cast<std::size_t>((v - g.x_min()) / dx);
    if (j >= n) j = n - 1;
    return std::pair<std::size_t, double>(j, v - g.x(j));
  };
  const auto [ja, sa] = locate(a);
  const auto [jb, sb] = locate(b);

  if (ja == jb)
    return partial_cell_integral(rho, ja, sb, dx, n) -
           partial_cell_integral(rho, ja, sa, dx, n);

  double sum = partial_cell_integral(rho, ja, dx, dx, n) -
               partial_cell_integral(rho, ja, sa, dx, n);
  for (std::size_t j = ja + 1; j < jb; ++j)
    sum += partial_cell_integral(rho, j, dx, dx, n);
  sum += partial_cell_integral(rho, jb, sb, dx, n);
  return sum;
}

WaveFunction apply_momentum(const WaveFunction& wf,
                            const ConstantsSet& constants) {
  FourierWorkspace fft(wf.psi.size());
  return apply_momentum(wf, constants, fft);
}

WaveFunction apply_momentum(const WaveFunction& wf,
                            const ConstantsSet& constants,
                            FourierWorkspace& fft) {
  if (fft.size() != wf.psi.size())
    throw GridMismatch("workspace size does not match state");
  WaveFunction out = wf;
  fft.forward(out.psi);
  const double hbar = constants.hbar();
  for (std::size_t m = 0; m < out.psi.size(); ++m)
    out.psi[m] *= hbar * wf.grid.wavenumber(m);
  fft.inverse(out.psi);
  return out;
}

cplx expectation(const WaveFunction& wf, const Operator1D& op) {
  return inner_product(op(wf), wf);
}

double expect_real(cplx z, double tol) {
  const double scale = std::max(1.0, std::abs(z));
  if (std::abs(z.imag()) > tol * scale)
    throw Error("expectation value has non-negligible imaginary part " +
                std::to_string(z.imag()));
  return z.real();
}

double expectation_position(const WaveFunction& wf) {
  double mean = 0.0;
  for (std::size_t j = 0; j < wf.psi.size(); ++j)
    mean += wf.grid.x(j) * std::norm(wf.psi[j]);
  return mean * wf.grid.dx();
}

double expectation_momentum(const WaveFunction& wf,
                            const ConstantsSet& constants) {
  // Spectral route: <p> = (dx/n) sum hbar k_m |c_m|^2, real by construction.
  std::vector<cplx> c = wf.psi;
  FourierWorkspace fft(c.size());
  fft.forward(c);
  const double w = wf.grid.dx() / static_cast<double>(c.size());
  double mean = 0.0;
  for (std::size_t m = 0; m < c.size(); ++m)
    mean += constants.hbar() * wf.grid.wavenumber(m) * std::norm(c[m]);
  return mean * w;
}

double kinetic_energy(const WaveFunction& wf, const ConstantsSet& constants) {
  std::vector<cplx> c = wf.psi;
  FourierWorkspace fft(c.size());
  fft.forward(c);
  const double w = wf.grid.dx() / static_cast<double>(c.size());
  const double hbar = constants.hbar();
  double sum = 0.0;
  for (std::size_t m = 0; m < c.size(); ++m) {
    const double p = hbar * wf.grid.wavenumber(m);
    sum += p * p * std::norm(c[m]);
  }
  return sum * w / (2.0 * constants.m_e());
}

double potential_energy(const WaveFunction& wf, const Potential& V) {
  if (V.values.size() != wf.psi.size())
    throw GridMismatch("potential does not match state grid");
  double sum = 0.0;
  for (std::size_t j = 0; j < wf.psi.size(); ++j)
    sum += V.values[j] * std::norm(wf.psi[j]);
  return sum * wf.grid.dx();
}

double total_energy(const WaveFunction& wf, const Potential& V,
                    const ConstantsSet& constants) {
  return kinetic_energy(wf, constants) + potential_energy(wf, V);
}

ObservableReport observable_report(const WaveFunction& wf,
                                   const ConstantsSet& constants,
                                   const Potential* potential) {
  FourierWorkspace fft(wf.psi.size());
  return observable_report(wf, constants, potential, fft);
}

ObservableReport observable_report(const WaveFunction& wf,
                                   const ConstantsSet& constants,
                                   const Potential* potential,
                                   FourierWorkspace& fft) {
  ObservableReport r;
  r.norm = norm(wf);

  const double dx = wf.grid.dx();
  double x1 = 0.0;
  for (std::size_t j = 0; j < wf.psi.size(); ++j)
    x1 += wf.grid.x(j) * std::norm(wf.psi[j]);
  x1 *= dx;
  double xvar = 0.0;
  for (std::size_t j = 0; j < wf.psi.size(); ++j) {
    const double d = wf.grid.x(j) - x1;
    xvar += d * d * std::norm(wf.psi[j]);
  }
  xvar *= dx;

  std::vector<cplx> c = wf.psi;
  fft.forward(c);
  const double w = dx / static_cast<double>(c.size());
  const double hbar = constants.hbar();
  double p1 = 0.0;
  for (std::size_t m = 0; m < c.size(); ++m)
    p1 += hbar * wf.grid.wavenumber(m) * std::norm(c[m]);
  p1 *= w;
  double pvar = 0.0;
  double ke = 0.0;
  for (std::size_t m = 0; m < c.size(); ++m) {
    const double p = hbar * wf.grid.wavenumber(m);
    const double weight = std::norm(c[m]) * w;
    pvar += (p - p1) * (p - p1) * weight;
    ke += p * p * weight;
  }
  ke /= 2.0 * constants.m_e();

  r.x_mean = x1;
  r.x_var = xvar;
  r.p_mean = p1;
  r.p_var = pvar;
  r.kinetic_energy = ke;
  r.potential_energy = potential ? potential_energy(wf, *potential) : 0.0;
  r.total_energy = r.kinetic_energy + r.potential_energy;
  r.uncertainty_product = std::sqrt(xvar * pvar);
  return r;
}

double momentum_squared_consistency(const WaveFunction& wf,
                                    const ConstantsSet& constants) {
  FourierWorkspace fft(wf.psi.size());
  const WaveFunction twice =
      apply_momentum(apply_momentum(wf, constants, fft), constants, fft);

  // Spectral Laplacian route: -hbar^2/2m * F^-1(-k^2 F psi).
  std::vector<cplx> lap = wf.psi;
  fft.forward(lap);
  for (std::size_t m = 0; m < lap.size(); ++m) {
    const double k = wf.grid.wavenumber(m);
    lap[m] *= -k * k;
  }
  fft.inverse(lap);

  const double scale = 1.0 / (2.0 * constants.m_e());
  const double hbar = constants.hbar();
  double sum = 0.0;
  for (std::size_t j = 0; j < lap.size(); ++j) {
    const cplx a = twice.psi[j] * scale;
    const cplx b = -hbar * hbar * scale * lap[j];
    sum += std::norm(a - b);
  }
  return std::sqrt(sum * wf.grid.dx());
}

MomentumEigenfunction momentum_eigenfunction(const SpatialGrid& grid, double p,
                                             const ConstantsSet& constants) {
  const double L = grid.length();
  const double hbar = constants.hbar();
  const double mode_real = p * L / (2.0 * std::numbers::pi * hbar);
  const double rounded = std::round(mode_real);
  if (std::abs(mode_real - rounded) > 1e-9)
    throw CommensurabilityError(
        "p = " + std::to_string(p) +
        " is not an exact eigenvalue on this periodic grid; exact momenta "
        "are hbar 2 pi j / L for integer j");
  const int mode = static_cast<int>(rounded);
  const auto half = static_cast<int>(grid.size() / 2);
  if (mode < -half || mode >= half)
    throw ModeOutOfRange("momentum mode " + std::to_string(mode) +
                         " is not representable on n = " +
                         std::to_string(grid.size()) + " samples");

  MomentumEigenfunction f{p, cplx(1.0 / std::sqrt(L), 0.0),
                          p == 0.0 ? std::numeric_limits<double>::infinity()
                                   : 2.0 * std::numbers::pi * hbar / p,
                          plane_wave_box(grid, mode, 0.0, 0.0)};
  return f;
}

double eigen_residual(const Operator1D& op, const WaveFunction& f, cplx q) {
  const double nf = norm(f);
  if (nf == 0.0) throw ZeroFunction("eigen residual of the zero function");
  WaveFunction r = op(f);
  for (std::size_t j = 0; j < r.psi.size(); ++j) r.psi[j] -= q * f.psi[j];
  return norm(r) / nf;
}

double de_broglie_wavelength(double p, const ConstantsSet& constants) {
  if (p == 0.0) throw ZeroMomentum("wavelength of zero momentum is undefined");
  return constants.h() / p;
}

double momentum_from_wavelength(double lambda, const ConstantsSet& constants) {
  if (!(lambda > 0.0))
    throw NonPositiveWavelength("wavelength must be positive, got " +
                                std::to_string(lambda));
  return constants.h() / lambda;
}

std::vector<double> sample_positions(const WaveFunction& wf,
                                     std::size_t count, std::uint64_t seed) {
  const std::vector<double> rho = density(wf);
  const std::size_t n = rho.size();
  std::vector<double> cdf(n + 1, 0.0);
  for (std::size_t j = 0; j < n; ++j) cdf[j + 1] = cdf[j] + rho[j];
  const double total = cdf[n];
  if (total == 0.0) throw ZeroFunction("cannot sample the zero function");

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double dx = wf.grid.dx();
  std::vector<double> samples(count);
  for (std::size_t i = 0; i < count; ++i) {
    const double u = unit(rng) * total;
    const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    std::size_t j = it == cdf.begin()
                        ? 0
                        : static_cast<std::size_t>(it - cdf.begin()) - 1;
    if (j >= n) j = n - 1;
    // Uniform within the cell centered on sample j keeps the mean unbiased.
    samples[i] = wf.grid.x(j) + (unit(rng) - 0.5) * dx;
  }
  return samples;
}

}  // namespace wavelab
