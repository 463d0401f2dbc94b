#ifndef WAVELAB_WAVEFUNCTION_HPP
#define WAVELAB_WAVEFUNCTION_HPP

#include <complex>
#include <vector>

#include "wavelab/constants.hpp"
#include "wavelab/grid.hpp"

namespace wavelab {

using cplx = std::complex<double>;

/// Complex amplitudes on a 1D grid plus a time stamp. Values are immutable
/// snapshots by convention: operations return new states.
struct WaveFunction {
  SpatialGrid grid;
  std::vector<cplx> psi;
  double t = 0.0;

  WaveFunction(SpatialGrid g, std::vector<cplx> amplitudes, double time = 0.0);
};

/// Same on a 2D grid, stored x-major: psi[ix * ny + iy].
struct WaveFunction2D {
  SpatialGrid2D grid;
  std::vector<cplx> psi;
  double t = 0.0;

  WaveFunction2D(SpatialGrid2D g, std::vector<cplx> amplitudes,
                 double time = 0.0);

  cplx& at(std::size_t ix, std::size_t iy) {
    return psi[ix * grid.y.size() + iy];
  }
  cplx at(std::size_t ix, std::size_t iy) const {
    return psi[ix * grid.y.size() + iy];
  }
};

/// Discrete L2 norm, (sum_j |psi_j|^2 dx)^(1/2).
double norm(const WaveFunction& wf);
double norm(const WaveFunction2D& wf);

/// Rescaled copy with norm 1. Throws ZeroFunction on the zero state.
WaveFunction normalize(const WaveFunction& wf);
WaveFunction2D normalize(const WaveFunction2D& wf);

/// <f, g> = sum_j f_j conj(g_j) dx. Expectation values are formed as
/// inner_product(Q psi, psi).
cplx inner_product(const WaveFunction& f, const WaveFunction& g);

/// Normalized Gaussian packet
///   psi(x) ~ exp(-(x - x0)^2 / (4 sigma0^2)) exp(i p0 x / hbar).
/// The packet should sit well inside the box; tails that reach the periodic
/// boundary alias around it.
WaveFunction gaussian_packet(const SpatialGrid& grid, double x0, double p0,
                             double sigma0, const ConstantsSet& constants);

/// Box-normalized traveling wave psi_j = L^(-1/2) exp(i (k x_j - omega t))
/// with k = 2 pi mode_index / L. mode_index must lie in [-n/2, n/2).
WaveFunction plane_wave_box(const SpatialGrid& grid, int mode_index, double t,
                            double omega);

/// Normalized 2D Gaussian beam with forward momentum p0 along x.
WaveFunction2D gaussian_beam(const SpatialGrid2D& grid, double x0, double y0,
                             double p0, double sigma_x, double sigma_y,
                             const ConstantsSet& constants);

/// Physical-convention Fourier coefficients psi_tilde_m = dx * sum_j psi_j
/// exp(-i k_m x_j), ladder-ordered. See fft.hpp for the pinned convention
/// and the Parseval factor of 2 pi.
std::vector<cplx> fourier_coefficients(const WaveFunction& wf);

}  // namespace wavelab

#endif  // WAVELAB_WAVEFUNCTION_HPP
