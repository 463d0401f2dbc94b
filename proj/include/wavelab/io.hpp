#ifndef WAVELAB_IO_HPP
#define WAVELAB_IO_HPP

#include <string>
#include <variant>
#include <vector>

#include "wavelab/double_slit.hpp"
#include "wavelab/evolve.hpp"

namespace wavelab {

/// Floating-point text formatting used by every CSV writer: 17 significant
/// digits, which round-trips IEEE doubles exactly.
std::string format_double(double v);

/// Observable series, one row per sample:
///   t, norm, x_mean, p_mean, x_var, p_var, kinetic, potential, total
void write_series_csv(const std::string& path,
                      const std::vector<ObservableSample>& series);

/// Snapshot CSV: commented grid/time header, then
///   x, re_psi, im_psi, prob_density          (1D)
///   x, y, re_psi, im_psi, prob_density       (2D)
void write_snapshot_csv(const std::string& path, const WaveFunction& wf);
void write_snapshot_csv(const std::string& path, const WaveFunction2D& wf);

/// Binary snapshot, little-endian, layout version 1:
///   bytes 0..3   magic "WVLB"
///   u16          format version (1)
///   u16          ndim (1 or 2)
///   u32, u32     nx, ny (ny = 1 for 1D)
///   f64 x4       x_min, x_max, y_min, y_max (y zeros for 1D)
///   f64          t
///   f64 pairs    re, im interleaved, x-major
void write_snapshot_binary(const std::string& path, const WaveFunction& wf);
void write_snapshot_binary(const std::string& path, const WaveFunction2D& wf);

using Snapshot = std::variant<WaveFunction, WaveFunction2D>;

/// Reads either format, sniffing the binary magic. CSV reading supports 1D
/// snapshots; throws IoError on anything malformed or truncated.
Snapshot read_snapshot(const std::string& path);
Snapshot read_snapshot_binary(const std::string& path);
Snapshot read_snapshot_csv(const std::string& path);

/// Screen profile: y, intensity.
void write_profile_csv(const std::string& path, const ScreenProfile& profile);

/// Fringe summary: detected maxima, spacing estimate and prediction.
void write_fringe_summary(const std::string& path,
                          const FringeAnalysis& analysis,
                          const ScreenProfile& profile);

/// Writes via a temporary file in the same directory and renames into
/// place, so a manifest is either absent or complete.
void write_text_atomic(const std::string& path, const std::string& content);

}  // namespace wavelab

#endif  // WAVELAB_IO_HPP
