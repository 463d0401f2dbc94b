#include "wavelab/grid.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace wavelab {
namespace {

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

}  // namespace

SpatialGrid::SpatialGrid(double x_min, double x_max, std::size_t n)
    : x_min_(x_min), x_max_(x_max), n_(n) {
  if (!(x_max > x_min))
    throw DegenerateInterval("grid requires x_max > x_min, got [" +
                             std::to_string(x_min) + ", " +
                             std::to_string(x_max) + "]");
  if (!is_power_of_two(n) || n < 8)
    throw NonPowerOfTwo("grid size must be a power of two >= 8, got " +
                        std::to_string(n));
  dx_ = (x_max - x_min) / static_cast<double>(n);
}

double SpatialGrid::wavenumber(std::size_t m) const {
  const auto half = n_ / 2;
  const double shifted = m < half ? static_cast<double>(m)
                                  : static_cast<double>(m) - static_cast<double>(n_);
  return 2.0 * std::numbers::pi * shifted / length();
}

std::vector<double> SpatialGrid::wavenumbers() const {
  std::vector<double> k(n_);
  for (std::size_t m = 0; m < n_; ++m) k[m] = wavenumber(m);
  return k;
}

std::size_t SpatialGrid::index_at_or_above(double value) const {
  if (value <= x_min_) return 0;
  const double j = std::ceil((value - x_min_) / dx_);
  const auto idx = static_cast<std::size_t>(j);
  return idx >= n_ ? n_ - 1 : idx;
}

SpatialGrid make_grid(double x_min, double x_max, std::size_t n) {
  return SpatialGrid(x_min, x_max, n);
}

SpatialGrid2D make_grid_2d(double x_min, double x_max, std::size_t nx,
                           double y_min, double y_max, std::size_t ny) {
  return SpatialGrid2D{SpatialGrid(x_min, x_max, nx),
                       SpatialGrid(y_min, y_max, ny)};
}

}  // namespace wavelab
