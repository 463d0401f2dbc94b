#ifndef WAVELAB_GRID_HPP
#define WAVELAB_GRID_HPP

#include <cstddef>
#include <vector>

#include "wavelab/errors.hpp"

namespace wavelab {

/// Uniform periodic sample grid on [x_min, x_max).
///
/// x_max is the wrap-around image of x_min and is not a stored sample, so
/// dx = (x_max - x_min) / n exactly and sample j sits at x_min + j dx.
/// The wavenumber ladder follows transform ordering: entry m carries
/// k_m = 2 pi m' / L with m' = m for m < n/2 and m' = m - n otherwise,
/// covering m' in [-n/2, n/2).
class SpatialGrid {
 public:
  SpatialGrid(double x_min, double x_max, std::size_t n);

  double x_min() const { return x_min_; }
  double x_max() const { return x_max_; }
  std::size_t size() const { return n_; }
  double length() const { return x_max_ - x_min_; }
  double dx() const { return dx_; }

  double x(std::size_t j) const { return x_min_ + static_cast<double>(j) * dx_; }
  double wavenumber(std::size_t m) const;
  std::vector<double> wavenumbers() const;

  /// Smallest nonnegative sample index whose coordinate is >= value,
  /// clamped to [0, n). Helper for screen planes and interval sums.
  std::size_t index_at_or_above(double value) const;

  bool operator==(const SpatialGrid&) const = default;

 private:
  double x_min_ = 0.0;
  double x_max_ = 0.0;
  std::size_t n_ = 0;
  double dx_ = 0.0;
};

SpatialGrid make_grid(double x_min, double x_max, std::size_t n);

/// Two independent periodic axes; x is the propagation axis, y transverse.
struct SpatialGrid2D {
  SpatialGrid x;
  SpatialGrid y;

  std::size_t size() const { return x.size() * y.size(); }
  bool operator==(const SpatialGrid2D&) const = default;
};

SpatialGrid2D make_grid_2d(double x_min, double x_max, std::size_t nx,
                           double y_min, double y_max, std::size_t ny);

}  // namespace wavelab

#endif  // WAVELAB_GRID_HPP
