#include "wavelab/wavefunction.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "wavelab/fft.hpp"

namespace wavelab {

WaveFunction::WaveFunction(SpatialGrid g, std::vector<cplx> amplitudes,
                           double time)
    : grid(g), psi(std::move(amplitudes)), t(time) {
  if (psi.size() != grid.size())
    throw GridMismatch("amplitude count " + std::to_string(psi.size()) +
                       " does not match grid size " +
                       std::to_string(grid.size()));
}

WaveFunction2D::WaveFunction2D(SpatialGrid2D g, std::vector<cplx> amplitudes,
                               double time)
    : grid(g), psi(std::move(amplitudes)), t(time) {
  if (psi.size() != grid.size())
    throw GridMismatch("amplitude count " + std::to_string(psi.size()) +
                       " does not match grid size " +
                       std::to_string(grid.size()));
}

namespace {

double sum_abs2(const std::vector<cplx>& v) {
  double s = 0.0;
  for (const auto& a : v) s += std::norm(a);
  return s;
}

}  // namespace

double norm(const WaveFunction& wf) {
  return std::sqrt(sum_abs2(wf.psi) * wf.grid.dx());
}

double norm(const WaveFunction2D& wf) {
  return std::sqrt(sum_abs2(wf.psi) * wf.grid.x.dx() * wf.grid.y.dx());
}

WaveFunction normalize(const WaveFunction& wf) {
  const double n = norm(wf);
  if (n == 0.0) throw ZeroFunction("cannot normalize the zero function");
  WaveFunction out = wf;
  const double inv = 1.0 / n;
  for (auto& a : out.psi) a *= inv;
  return out;
}

WaveFunction2D normalize(const WaveFunction2D& wf) {
  const double n = norm(wf);
  if (n == 0.0) throw ZeroFunction("cannot normalize the zero function");
  WaveFunction2D out = wf;
  const double inv = 1.0 / n;
  for (auto& a : out.psi) a *= inv;
  return out;
}

cplx inner_product(const WaveFunction& f, const WaveFunction& g) {
  if (!(f.grid == g.grid))
    throw GridMismatch("inner product requires matching grids");
  cplx s = 0.0;
  for (std::size_t j = 0; j < f.psi.size(); ++j)
    s += f.psi[j] * std::conj(g.psi[j]);
  return s * f.grid.dx();
}

WaveFunction gaussian_packet(const SpatialGrid& grid, double x0, double p0,
                             double sigma0, const ConstantsSet& constants) {
  if (!(sigma0 > 0.0))
    throw NonPositiveWidth("gaussian packet width must be positive, got " +
                           std::to_string(sigma0));
  const double hbar = constants.hbar();
  std::vector<cplx> psi(grid.size());
  for (std::size_t j = 0; j < grid.size(); ++j) {
    const double x = grid.x(j);
    const double d = x - x0;
    const double envelope = std::exp(-d * d / (4.0 * sigma0 * sigma0));
    psi[j] = envelope * std::polar(1.0, p0 * x / hbar);
  }
  return normalize(WaveFunction(grid, std::move(psi)));
}

WaveFunction plane_wave_box(const SpatialGrid& grid, int mode_index, double t,
                            double omega) {
  const auto half = static_cast<long>(grid.size() / 2);
  if (mode_index < -half || mode_index >= half)
    throw ModeOutOfRange("mode " + std::to_string(mode_index) +
                         " outside [-n/2, n/2) for n = " +
                         std::to_string(grid.size()));
  const double L = grid.length();
  const double k = 2.0 * std::numbers::pi * static_cast<double>(mode_index) / L;
  const double amplitude = 1.0 / std::sqrt(L);
  std::vector<cplx> psi(grid.size());
  for (std::size_t j = 0; j < grid.size(); ++j)
    psi[j] = amplitude * std::polar(1.0, k * grid.x(j) - omega * t);
  return WaveFunction(grid, std::move(psi), t);
}

WaveFunction2D gaussian_beam(const SpatialGrid2D& grid, double x0, double y0,
                             double p0, double sigma_x, double sigma_y,
                             const ConstantsSet& constants) {
  if (!(sigma_x > 0.0) || !(sigma_y > 0.0))
    throw NonPositiveWidth("gaussian beam widths must be positive");
  const double hbar = constants.hbar();
  const std::size_t nx = grid.x.size();
  const std::size_t ny = grid.y.size();
  std::vector<cplx> psi(nx * ny);
  for (std::size_t ix = 0; ix < nx; ++ix) {
    const double dxv = grid.x.x(ix) - x0;
    const cplx along_x = std::exp(-dxv * dxv / (4.0 * sigma_x * sigma_x)) *
                         std::polar(1.0, p0 * grid.x.x(ix) / hbar);
    for (std::size_t iy = 0; iy < ny; ++iy) {
      const double dyv = grid.y.x(iy) - y0;
      psi[ix * ny + iy] =
          along_x * std::exp(-dyv * dyv / (4.0 * sigma_y * sigma_y));
    }
  }
  return normalize(WaveFunction2D(grid, std::move(psi)));
}

std::vector<cplx> fourier_coefficients(const WaveFunction& wf) {
  std::vector<cplx> c = wf.psi;
  FourierWorkspace fft(c.size());
  fft.forward(c);
  // The raw DFT analyzes against exp(-2 pi i j m / n); restore the grid
  // offset phase and quadrature weight to get dx * sum psi exp(-i k x).
  const double dx = wf.grid.dx();
  for (std::size_t m = 0; m < c.size(); ++m) {
    const double k = wf.grid.wavenumber(m);
    c[m] *= dx * std::polar(1.0, -k * wf.grid.x_min());
  }
  return c;
}

}  // namespace wavelab
