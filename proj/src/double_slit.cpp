#include "wavelab/double_slit.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "wavelab/fft.hpp"

namespace wavelab {
namespace {

std::vector<double> cosine_ramp_mask(const SpatialGrid& axis,
                                     double ramp_fraction = 0.1) {
  const std::size_t n = axis.size();
  std::vector<double> mask(n, 1.0);
  const double L = axis.length();
  const double ramp = ramp_fraction * L;
  for (std::size_t j = 0; j < n; ++j) {
    const double from_lo = axis.x(j) - axis.x_min();
    const double from_hi = axis.x_max() - axis.x(j);
    const double edge = std::min(from_lo, from_hi);
    if (edge < ramp) {
      const double c = std::cos(0.5 * std::numbers::pi * (1.0 - edge / ramp));
      mask[j] = c * c;
    }
  }
  return mask;
}

}  // namespace

DoubleSlitResult double_slit_run(const DoubleSlitConfig& config) {
  if (!(config.dt > 0.0) || config.steps < 1)
    throw Error("double slit run requires dt > 0 and steps >= 1");
  if (config.p0 <= 0.0)
    throw Error("double slit beam needs forward momentum p0 > 0");
  if (config.screen_x <= config.slit.barrier_x)
    throw Error("screen must sit behind the slit barrier");

  const SpatialGrid& gx = config.grid.x;
  const SpatialGrid& gy = config.grid.y;
  const std::size_t nx = gx.size();
  const std::size_t ny = gy.size();
  const double hbar = config.constants.hbar();
  const double mass = config.constants.m_e();

  const Potential2D potential =
      build_potential_2d(config.slit, config.grid, config.constants);

  WaveFunction2D state =
      gaussian_beam(config.grid, config.x0, config.y0, config.p0,
                    config.sigma_x, config.sigma_y, config.constants);

  // Split-step phase factors.
  std::vector<cplx> half_v(nx * ny);
  for (std::size_t i = 0; i < half_v.size(); ++i)
    half_v[i] = std::polar(1.0, -potential.values[i] * config.dt / (2.0 * hbar));
  std::vector<cplx> kinetic(nx * ny);
  for (std::size_t ix = 0; ix < nx; ++ix) {
    const double kx = gx.wavenumber(ix);
    for (std::size_t iy = 0; iy < ny; ++iy) {
      const double ky = gy.wavenumber(iy);
      kinetic[ix * ny + iy] = std::polar(
          1.0, -hbar * (kx * kx + ky * ky) * config.dt / (2.0 * mass));
    }
  }

  std::vector<double> mask;
  if (config.absorber) {
    const auto mx = cosine_ramp_mask(gx);
    const auto my = cosine_ramp_mask(gy);
    mask.resize(nx * ny);
    for (std::size_t ix = 0; ix < nx; ++ix)
      for (std::size_t iy = 0; iy < ny; ++iy)
        mask[ix * ny + iy] = mx[ix] * my[iy];
  }

  const std::size_t screen_ix = gx.index_at_or_above(config.screen_x);
  std::vector<double> intensity(ny, 0.0);

  FourierWorkspace2D fft(nx, ny);
  for (long step = 0; step < config.steps; ++step) {
    auto& psi = state.psi;
    for (std::size_t i = 0; i < psi.size(); ++i) psi[i] *= half_v[i];
    fft.forward(psi);
    for (std::size_t i = 0; i < psi.size(); ++i) psi[i] *= kinetic[i];
    fft.inverse(psi);
    for (std::size_t i = 0; i < psi.size(); ++i) psi[i] *= half_v[i];
    if (config.absorber)
      for (std::size_t i = 0; i < psi.size(); ++i) psi[i] *= mask[i];
    state.t += config.dt;

    for (std::size_t iy = 0; iy < ny; ++iy)
      intensity[iy] += std::norm(state.at(screen_ix, iy)) * config.dt;
  }

  // Probability beyond the screen plane at the end of the run.
  double beyond = 0.0;
  for (std::size_t ix = screen_ix; ix < nx; ++ix)
    for (std::size_t iy = 0; iy < ny; ++iy)
      beyond += std::norm(state.at(ix, iy));
  beyond *= gx.dx() * gy.dx();
  if (beyond < config.min_transmitted)
    throw ScreenNotReached(
        "only " + std::to_string(beyond) +
        " of the probability lies beyond the screen plane; the beam did not "
        "arrive (needed " +
        std::to_string(config.min_transmitted) + ")");

  ScreenProfile profile;
  profile.y.resize(ny);
  for (std::size_t iy = 0; iy < ny; ++iy) profile.y[iy] = gy.x(iy);
  profile.intensity = std::move(intensity);
  profile.screen_x = gx.x(screen_ix);
  profile.transmitted_fraction = beyond;
  profile.de_broglie_lambda = 2.0 * std::numbers::pi * hbar / config.p0;
  profile.slit_separation = config.slit.slit_separation;
  // Diffraction starts at the aperture plane, the barrier's exit face.
  profile.screen_distance = profile.screen_x - config.slit.barrier_x -
                            0.5 * config.slit.barrier_thickness;
  profile.predicted_fringe_spacing = profile.de_broglie_lambda *
                                     profile.screen_distance /
                                     profile.slit_separation;
  return DoubleSlitResult{std::move(profile), std::move(state)};
}

namespace {

// Topographic prominence: height above the deeper of the two saddles that
// separate the peak from higher ground (array ends count as ground level).
double peak_prominence(const std::vector<double>& I, std::size_t j) {
  double left_saddle = I[j];
  for (std::size_t i = j; i-- > 0;) {
    left_saddle = std::min(left_saddle, I[i]);
    if (I[i] > I[j]) break;
  }
  double right_saddle = I[j];
  for (std::size_t i = j + 1; i < I.size(); ++i) {
    right_saddle = std::min(right_saddle, I[i]);
    if (I[i] > I[j]) break;
  }
  return I[j] - std::max(left_saddle, right_saddle);
}

}  // namespace

FringeAnalysis analyze_fringes(const ScreenProfile& profile,
                               double rel_threshold, double min_prominence) {
  const auto& I = profile.intensity;
  const auto& y = profile.y;
  const std::size_t n = I.size();
  FringeAnalysis out;
  out.predicted_spacing = profile.predicted_fringe_spacing;
  if (n < 3) return out;

  double peak = 0.0;
  for (double v : I) peak = std::max(peak, v);
  if (peak <= 0.0) return out;
  const double floor = rel_threshold * peak;

  for (std::size_t j = 1; j + 1 < n; ++j) {
    if (I[j] < floor) continue;
    if (!(I[j] > I[j - 1] && I[j] >= I[j + 1])) continue;
    if (peak_prominence(I, j) < min_prominence * peak) continue;
    // Parabolic sub-sample refinement around the peak.
    const double denom = I[j - 1] - 2.0 * I[j] + I[j + 1];
    double offset = 0.0;
    if (denom < 0.0) offset = 0.5 * (I[j - 1] - I[j + 1]) / denom;
    out.maxima_y.push_back(y[j] + offset * (y[1] - y[0]));
  }
  if (out.maxima_y.empty()) return out;

  // Central maximum: the detected peak closest to y = 0.
  std::size_t central = 0;
  for (std::size_t i = 1; i < out.maxima_y.size(); ++i)
    if (std::abs(out.maxima_y[i]) < std::abs(out.maxima_y[central]))
      central = i;
  out.central_y = out.maxima_y[central];

  if (central > 0 && central + 1 < out.maxima_y.size())
    out.spacing_estimate =
        0.5 * (out.maxima_y[central + 1] - out.maxima_y[central - 1]);
  return out;
}

}  // namespace wavelab
