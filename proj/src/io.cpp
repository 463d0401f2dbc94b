#include "wavelab/io.hpp"

#include <bit>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <sstream>

static_assert(std::endian::native == std::endian::little,
              "snapshot format is little-endian; add byte swapping for this "
              "platform");

namespace wavelab {
namespace {

constexpr char kMagic[4] = {'W', 'V', 'L', 'B'};
constexpr std::uint16_t kFormatVersion = 1;

std::ofstream open_out(const std::string& path, std::ios::openmode mode) {
  std::ofstream out(path, mode);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  return out;
}

template <typename T>
void put(std::ostream& out, const T& v) {
  out.write(reinterpret_cast<const char*>(&v), sizeof(T));
}

template <typename T>
T get(std::istream& in, const std::string& path) {
  T v;
  in.read(reinterpret_cast<char*>(&v), sizeof(T));
  if (!in) throw IoError("'" + path + "' is truncated");
  return v;
}

void write_binary_header(std::ostream& out, std::uint16_t ndim,
                         std::uint32_t nx, std::uint32_t ny, double x_min,
                         double x_max, double y_min, double y_max, double t) {
  out.write(kMagic, 4);
  put(out, kFormatVersion);
  put(out, ndim);
  put(out, nx);
  put(out, ny);
  put(out, x_min);
  put(out, x_max);
  put(out, y_min);
  put(out, y_max);
  put(out, t);
}

void write_amplitudes(std::ostream& out, const std::vector<cplx>& psi) {
  for (const cplx& a : psi) {
    put(out, a.real());
    put(out, a.imag());
  }
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void write_series_csv(const std::string& path,
                      const std::vector<ObservableSample>& series) {
  auto out = open_out(path, std::ios::out);
  out << "t,norm,x_mean,p_mean,x_var,p_var,kinetic,potential,total\n";
  for (const auto& s : series) {
    out << format_double(s.t) << ',' << format_double(s.norm) << ','
        << format_double(s.x_mean) << ',' << format_double(s.p_mean) << ','
        << format_double(s.x_var) << ',' << format_double(s.p_var) << ','
        << format_double(s.kinetic) << ',' << format_double(s.potential)
        << ',' << format_double(s.total) << '\n';
  }
}

void write_snapshot_csv(const std::string& path, const WaveFunction& wf) {
  auto out = open_out(path, std::ios::out);
  out << "# grid x_min=" << format_double(wf.grid.x_min())
      << " x_max=" << format_double(wf.grid.x_max()) << " n=" << wf.grid.size()
      << "\n";
  out << "# t=" << format_double(wf.t) << "\n";
  out << "x,re_psi,im_psi,prob_density\n";
  for (std::size_t j = 0; j < wf.psi.size(); ++j) {
    const cplx a = wf.psi[j];
    out << format_double(wf.grid.x(j)) << ',' << format_double(a.real())
        << ',' << format_double(a.imag()) << ',' << format_double(std::norm(a))
        << '\n';
  }
}

void write_snapshot_csv(const std::string& path, const WaveFunction2D& wf) {
  auto out = open_out(path, std::ios::out);
  const auto& gx = wf.grid.x;
  const auto& gy = wf.grid.y;
  out << "# grid x_min=" << format_double(gx.x_min())
      << " x_max=" << format_double(gx.x_max()) << " n=" << gx.size()
      << " y_min=" << format_double(gy.x_min())
      << " y_max=" << format_double(gy.x_max()) << " ny=" << gy.size() << "\n";
  out << "# t=" << format_double(wf.t) << "\n";
  out << "x,y,re_psi,im_psi,prob_density\n";
  for (std::size_t ix = 0; ix < gx.size(); ++ix)
    for (std::size_t iy = 0; iy < gy.size(); ++iy) {
      const cplx a = wf.at(ix, iy);
      out << format_double(gx.x(ix)) << ',' << format_double(gy.x(iy)) << ','
          << format_double(a.real()) << ',' << format_double(a.imag()) << ','
          << format_double(std::norm(a)) << '\n';
    }
}

void write_snapshot_binary(const std::string& path, const WaveFunction& wf) {
  auto out = open_out(path, std::ios::binary);
  write_binary_header(out, 1, static_cast<std::uint32_t>(wf.grid.size()), 1,
                      wf.grid.x_min(), wf.grid.x_max(), 0.0, 0.0, wf.t);
  write_amplitudes(out, wf.psi);
}

void write_snapshot_binary(const std::string& path, const WaveFunction2D& wf) {
  auto out = open_out(path, std::ios::binary);
  write_binary_header(out, 2, static_cast<std::uint32_t>(wf.grid.x.size()),
                      static_cast<std::uint32_t>(wf.grid.y.size()),
                      wf.grid.x.x_min(), wf.grid.x.x_max(), wf.grid.y.x_min(),
                      wf.grid.y.x_max(), wf.t);
  write_amplitudes(out, wf.psi);
}

Snapshot read_snapshot_binary(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  char magic[4];
  in.read(magic, 4);
  if (!in || std::memcmp(magic, kMagic, 4) != 0)
    throw IoError("'" + path + "' is not a wavelab snapshot (bad magic)");
  const auto version = get<std::uint16_t>(in, path);
  if (version != kFormatVersion)
    throw IoError("'" + path + "' has unsupported format version " +
                  std::to_string(version));
  const auto ndim = get<std::uint16_t>(in, path);
  if (ndim != 1 && ndim != 2)
    throw IoError("'" + path + "' has invalid dimensionality " +
                  std::to_string(ndim));
  const auto nx = get<std::uint32_t>(in, path);
  const auto ny = get<std::uint32_t>(in, path);
  const auto x_min = get<double>(in, path);
  const auto x_max = get<double>(in, path);
  const auto y_min = get<double>(in, path);
  const auto y_max = get<double>(in, path);
  const auto t = get<double>(in, path);

  const std::size_t count =
      static_cast<std::size_t>(nx) * (ndim == 2 ? ny : 1);
  std::vector<cplx> psi(count);
  for (std::size_t j = 0; j < count; ++j) {
    const double re = get<double>(in, path);
    const double im = get<double>(in, path);
    psi[j] = cplx(re, im);
  }
  char extra;
  if (in.read(&extra, 1))
    throw IoError("'" + path + "' has trailing bytes after the payload");

  try {
    if (ndim == 1)
      return WaveFunction(SpatialGrid(x_min, x_max, nx), std::move(psi), t);
    return WaveFunction2D(SpatialGrid2D{SpatialGrid(x_min, x_max, nx),
                                        SpatialGrid(y_min, y_max, ny)},
                          std::move(psi), t);
  } catch (const Error& e) {
    throw IoError("'" + path + "' holds an invalid grid: " + e.what());
  }
}

Snapshot read_snapshot_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "'");
  double x_min = 0.0, x_max = 0.0, t = 0.0;
  std::size_t n = 0;
  bool have_grid = false;
  std::vector<cplx> psi;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      std::istringstream hdr(line.substr(1));
      std::string word;
      hdr >> word;
      if (word == "grid") {
        while (hdr >> word) {
          const auto eq = word.find('=');
          if (eq == std::string::npos) continue;
          const std::string key = word.substr(0, eq);
          const std::string value = word.substr(eq + 1);
          if (key == "x_min") x_min = std::stod(value);
          if (key == "x_max") x_max = std::stod(value);
          if (key == "n") n = std::stoul(value);
          if (key == "ny")
            throw IoError("'" + path +
                          "': 2D CSV snapshots cannot be read back; use the "
                          "binary format");
        }
        have_grid = true;
      } else if (word.rfind("t=", 0) == 0) {
        t = std::stod(word.substr(2));
      }
      continue;
    }
    if (line.rfind("x,", 0) == 0) continue;  // column header
    std::istringstream row(line);
    std::string cell;
    std::vector<double> cells;
    while (std::getline(row, cell, ','))
      try {
        cells.push_back(std::stod(cell));
      } catch (const std::exception&) {
        throw IoError("'" + path + "': malformed row '" + line + "'");
      }
    if (cells.size() != 4)
      throw IoError("'" + path + "': expected 4 columns, got " +
                    std::to_string(cells.size()));
    psi.emplace_back(cells[1], cells[2]);
  }
  if (!have_grid || psi.empty())
    throw IoError("'" + path + "' is missing the grid header or data rows");
  if (psi.size() != n)
    throw IoError("'" + path + "' is truncated: header names " +
                  std::to_string(n) + " samples, file has " +
                  std::to_string(psi.size()));
  try {
    return WaveFunction(SpatialGrid(x_min, x_max, n), std::move(psi), t);
  } catch (const Error& e) {
    throw IoError("'" + path + "' holds an invalid grid: " + e.what());
  }
}

Snapshot read_snapshot(const std::string& path) {
  std::ifstream probe(path, std::ios::binary);
  if (!probe) throw IoError("cannot open '" + path + "'");
  char magic[4] = {0, 0, 0, 0};
  probe.read(magic, 4);
  probe.close();
  if (std::memcmp(magic, kMagic, 4) == 0) return read_snapshot_binary(path);
  return read_snapshot_csv(path);
}

void write_profile_csv(const std::string& path, const ScreenProfile& profile) {
  auto out = open_out(path, std::ios::out);
  out << "y,intensity\n";
  for (std::size_t j = 0; j < profile.y.size(); ++j)
    out << format_double(profile.y[j]) << ','
        << format_double(profile.intensity[j]) << '\n';
}

void write_fringe_summary(const std::string& path,
                          const FringeAnalysis& analysis,
                          const ScreenProfile& profile) {
  auto out = open_out(path, std::ios::out);
  out << "screen_x = " << format_double(profile.screen_x) << "\n";
  out << "transmitted_fraction = "
      << format_double(profile.transmitted_fraction) << "\n";
  out << "de_broglie_lambda = " << format_double(profile.de_broglie_lambda)
      << "\n";
  out << "slit_separation = " << format_double(profile.slit_separation)
      << "\n";
  out << "screen_distance = " << format_double(profile.screen_distance)
      << "\n";
  out << "predicted_fringe_spacing = "
      << format_double(analysis.predicted_spacing) << "\n";
  out << "detected_maxima_count = " << analysis.maxima_y.size() << "\n";
  out << "central_maximum_y = " << format_double(analysis.central_y) << "\n";
  out << "fringe_spacing_estimate = "
      << format_double(analysis.spacing_estimate) << "\n";
  out << "maxima_y =";
  for (double y : analysis.maxima_y) out << ' ' << format_double(y);
  out << "\n";
}

void write_text_atomic(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  const fs::path tmp = target.parent_path().empty()
                           ? fs::path(target.string() + ".tmp")
                           : target.parent_path() /
                                 (target.filename().string() + ".tmp");
  {
    std::ofstream out(tmp);
    if (!out) throw IoError("cannot open '" + tmp.string() + "' for writing");
    out << content;
    out.flush();
    if (!out) throw IoError("failed writing '" + tmp.string() + "'");
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec)
    throw IoError("cannot move '" + tmp.string() + "' into place: " +
                  ec.message());
}

}  // namespace wavelab
