#include "wavelab/potential.hpp"

#include <cmath>

namespace wavelab {
namespace {

void check_finite(const std::vector<double>& values) {
  for (double v : values)
    if (!std::isfinite(v))
      throw BadPotentialSpec("potential values must be finite");
}

struct Builder1D {
  const SpatialGrid& grid;
  const ConstantsSet& constants;

  Potential operator()(const FreeSpec&) const {
    return Potential{std::vector<double>(grid.size(), 0.0)};
  }

  Potential operator()(const HarmonicSpec& s) const {
    if (!(s.omega > 0.0))
      throw BadPotentialSpec("harmonic potential requires omega > 0");
    const double m = constants.m_e();
    std::vector<double> v(grid.size());
    for (std::size_t j = 0; j < grid.size(); ++j) {
      const double x = grid.x(j);
      v[j] = 0.5 * m * s.omega * s.omega * x * x;
    }
    return Potential{std::move(v)};
  }

  Potential operator()(const SquareWellSpec& s) const {
    if (!(s.depth > 0.0) || !(s.width > 0.0))
      throw BadPotentialSpec("square well requires positive depth and width");
    const double center = 0.5 * (grid.x_min() + grid.x_max());
    std::vector<double> v(grid.size(), 0.0);
    for (std::size_t j = 0; j < grid.size(); ++j)
      if (std::abs(grid.x(j) - center) < 0.5 * s.width) v[j] = -s.depth;
    return Potential{std::move(v)};
  }

  Potential operator()(const BarrierSpec& s) const {
    if (!(s.height > 0.0) || !(s.width > 0.0))
      throw BadPotentialSpec("barrier requires positive height and width");
    std::vector<double> v(grid.size(), 0.0);
    for (std::size_t j = 0; j < grid.size(); ++j)
      if (std::abs(grid.x(j) - s.center) < 0.5 * s.width) v[j] = s.height;
    return Potential{std::move(v)};
  }

  Potential operator()(const DoubleSlitSpec&) const {
    throw KindRequires2D("double_slit potential requires a 2D grid");
  }

  Potential operator()(const TabulatedSpec& s) const {
    if (s.values.size() != grid.size())
      throw BadPotentialSpec("tabulated potential has " +
                             std::to_string(s.values.size()) +
                             " values for a grid of " +
                             std::to_string(grid.size()));
    check_finite(s.values);
    return Potential{s.values};
  }
};

bool inside_slit(double y, double center, double width) {
  return width > 0.0 && std::abs(y - center) < 0.5 * width;
}

struct Builder2D {
  const SpatialGrid2D& grid;
  const ConstantsSet& constants;

  Potential2D operator()(const FreeSpec&) const {
    return Potential2D{std::vector<double>(grid.size(), 0.0)};
  }

  Potential2D operator()(const DoubleSlitSpec& s) const {
    if (!(s.barrier_height > 0.0) || !(s.barrier_thickness > 0.0))
      throw BadPotentialSpec(
          "double slit requires positive barrier height and thickness");
    if (!(s.slit_separation > 0.0) || s.upper_width() < 0.0 ||
        s.lower_width() < 0.0)
      throw BadPotentialSpec("double slit requires positive separation and "
                             "nonnegative slit widths");
    const std::size_t nx = grid.x.size();
    const std::size_t ny = grid.y.size();
    const double y_up = 0.5 * s.slit_separation;
    std::vector<double> v(nx * ny, 0.0);
    for (std::size_t ix = 0; ix < nx; ++ix) {
      if (std::abs(grid.x.x(ix) - s.barrier_x) >= 0.5 * s.barrier_thickness)
        continue;
      for (std::size_t iy = 0; iy < ny; ++iy) {
        const double y = grid.y.x(iy);
        const bool open = inside_slit(y, y_up, s.upper_width()) ||
                          inside_slit(y, -y_up, s.lower_width());
        if (!open) v[ix * ny + iy] = s.barrier_height;
      }
    }
    return Potential2D{std::move(v)};
  }

  Potential2D operator()(const TabulatedSpec& s) const {
    if (s.values.size() != grid.size())
      throw BadPotentialSpec("tabulated potential size mismatch on 2D grid");
    check_finite(s.values);
    return Potential2D{s.values};
  }

  template <typename Other>
  Potential2D operator()(const Other&) const {
    throw BadPotentialSpec("potential kind not supported on 2D grids");
  }
};

}  // namespace

std::string potential_kind_name(const PotentialSpec& spec) {
  return std::visit(
      [](const auto& s) -> std::string {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, FreeSpec>) return "free";
        if constexpr (std::is_same_v<T, HarmonicSpec>) return "harmonic";
        if constexpr (std::is_same_v<T, SquareWellSpec>) return "square_well";
        if constexpr (std::is_same_v<T, BarrierSpec>) return "barrier";
        if constexpr (std::is_same_v<T, DoubleSlitSpec>) return "double_slit";
        if constexpr (std::is_same_v<T, TabulatedSpec>) return "tabulated";
      },
      spec);
}

Potential build_potential(const PotentialSpec& spec, const SpatialGrid& grid,
                          const ConstantsSet& constants) {
  return std::visit(Builder1D{grid, constants}, spec);
}

Potential2D build_potential_2d(const PotentialSpec& spec,
                               const SpatialGrid2D& grid,
                               const ConstantsSet& constants) {
  return std::visit(Builder2D{grid, constants}, spec);
}

}  // namespace wavelab
