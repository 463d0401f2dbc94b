#ifndef WAVELAB_POTENTIAL_HPP
#define WAVELAB_POTENTIAL_HPP

#include <string>
#include <variant>
#include <vector>

#include "wavelab/constants.hpp"
#include "wavelab/grid.hpp"

namespace wavelab {

struct FreeSpec {};

struct HarmonicSpec {
  double omega = 1.0;  // V = 1/2 m omega^2 x^2
};

/// Attractive well of the given depth, centered on the box midpoint.
struct SquareWellSpec {
  double depth = 1.0;
  double width = 1.0;
};

struct BarrierSpec {
  double height = 1.0;
  double width = 1.0;
  double center = 0.0;
};

/// A high barrier slab normal to x with two transverse gaps. Slits are
/// centered at y = +/- slit_separation / 2; a width override of zero closes
/// that slit (negative means "use slit_width").
struct DoubleSlitSpec {
  double barrier_height = 0.0;
  double barrier_x = 0.0;
  double barrier_thickness = 0.5;
  double slit_separation = 4.0;
  double slit_width = 1.0;
  double slit_width_upper = -1.0;
  double slit_width_lower = -1.0;

  double upper_width() const {
    return slit_width_upper < 0.0 ? slit_width : slit_width_upper;
  }
  double lower_width() const {
    return slit_width_lower < 0.0 ? slit_width : slit_width_lower;
  }
};

struct TabulatedSpec {
  std::vector<double> values;
};

using PotentialSpec = std::variant<FreeSpec, HarmonicSpec, SquareWellSpec,
                                   BarrierSpec, DoubleSlitSpec, TabulatedSpec>;

/// Potential materialized on a 1D grid.
struct Potential {
  std::vector<double> values;
};

/// Potential materialized on a 2D grid, x-major like WaveFunction2D.
struct Potential2D {
  std::vector<double> values;
};

std::string potential_kind_name(const PotentialSpec& spec);

/// Evaluates the spec on the grid. DoubleSlitSpec requires a 2D grid and is
/// rejected here with KindRequires2D.
Potential build_potential(const PotentialSpec& spec, const SpatialGrid& grid,
                          const ConstantsSet& constants);

/// 2D evaluation; supports free, double_slit and tabulated kinds.
Potential2D build_potential_2d(const PotentialSpec& spec,
                               const SpatialGrid2D& grid,
                               const ConstantsSet& constants);

}  // namespace wavelab

#endif  // WAVELAB_POTENTIAL_HPP
