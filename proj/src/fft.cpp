#include "wavelab/fft.hpp"

#include <fftw3.h>

#include <cstring>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace wavelab {
namespace {

// FFTW's planner is not reentrant; execution is. Guard plan lifecycle only.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

fftw_complex* as_fftw(std::complex<double>* p) {
  return reinterpret_cast<fftw_complex*>(p);
}

}  // namespace

FourierWorkspace::FourierWorkspace(std::size_t n) : n_(n) {
  if (n == 0) throw std::invalid_argument("FourierWorkspace: empty transform");
  std::lock_guard lock(planner_mutex());
  buffer_ = reinterpret_cast<std::complex<double>*>(
      fftw_malloc(sizeof(fftw_complex) * n));
  if (!buffer_) throw std::bad_alloc();
  // FFTW_ESTIMATE keeps plan selection deterministic across runs.
  plan_fwd_ = fftw_plan_dft_1d(static_cast<int>(n), as_fftw(buffer_),
                               as_fftw(buffer_), FFTW_FORWARD, FFTW_ESTIMATE);
  plan_bwd_ = fftw_plan_dft_1d(static_cast<int>(n), as_fftw(buffer_),
                               as_fftw(buffer_), FFTW_BACKWARD, FFTW_ESTIMATE);
}

FourierWorkspace::~FourierWorkspace() { destroy(); }

FourierWorkspace::FourierWorkspace(FourierWorkspace&& other) noexcept
    : n_(other.n_),
      plan_fwd_(std::exchange(other.plan_fwd_, nullptr)),
      plan_bwd_(std::exchange(other.plan_bwd_, nullptr)),
      buffer_(std::exchange(other.buffer_, nullptr)) {}

FourierWorkspace& FourierWorkspace::operator=(FourierWorkspace&& other) noexcept {
  if (this != &other) {
    destroy();
    n_ = other.n_;
    plan_fwd_ = std::exchange(other.plan_fwd_, nullptr);
    plan_bwd_ = std::exchange(other.plan_bwd_, nullptr);
    buffer_ = std::exchange(other.buffer_, nullptr);
  }
  return *this;
}

void FourierWorkspace::destroy() {
  if (!buffer_ && !plan_fwd_ && !plan_bwd_) return;
  std::lock_guard lock(planner_mutex());
  if (plan_fwd_) fftw_destroy_plan(static_cast<fftw_plan>(plan_fwd_));
  if (plan_bwd_) fftw_destroy_plan(static_cast<fftw_plan>(plan_bwd_));
  if (buffer_) fftw_free(buffer_);
  plan_fwd_ = plan_bwd_ = nullptr;
  buffer_ = nullptr;
}

void FourierWorkspace::forward(std::span<std::complex<double>> data) {
  if (data.size() != n_)
    throw std::invalid_argument("FourierWorkspace: size mismatch");
  std::memcpy(buffer_, data.data(), n_ * sizeof(std::complex<double>));
  fftw_execute(static_cast<fftw_plan>(plan_fwd_));
  std::memcpy(data.data(), buffer_, n_ * sizeof(std::complex<double>));
}

void FourierWorkspace::inverse(std::span<std::complex<double>> data) {
  if (data.size() != n_)
    throw std::invalid_argument("FourierWorkspace: size mismatch");
  std::memcpy(buffer_, data.data(), n_ * sizeof(std::complex<double>));
  fftw_execute(static_cast<fftw_plan>(plan_bwd_));
  const double scale = 1.0 / static_cast<double>(n_);
  for (std::size_t j = 0; j < n_; ++j) data[j] = buffer_[j] * scale;
}

FourierWorkspace2D::FourierWorkspace2D(std::size_t nx, std::size_t ny)
    : nx_(nx), ny_(ny) {
  if (nx == 0 || ny == 0)
    throw std::invalid_argument("FourierWorkspace2D: empty transform");
  std::lock_guard lock(planner_mutex());
  buffer_ = reinterpret_cast<std::complex<double>*>(
      fftw_malloc(sizeof(fftw_complex) * nx * ny));
  if (!buffer_) throw std::bad_alloc();
  // Row-major layout: data[ix * ny + iy]; FFTW wants (n0, n1) = (nx, ny).
  plan_fwd_ =
      fftw_plan_dft_2d(static_cast<int>(nx), static_cast<int>(ny),
                       as_fftw(buffer_), as_fftw(buffer_), FFTW_FORWARD,
                       FFTW_ESTIMATE);
  plan_bwd_ =
      fftw_plan_dft_2d(static_cast<int>(nx), static_cast<int>(ny),
                       as_fftw(buffer_), as_fftw(buffer_), FFTW_BACKWARD,
                       FFTW_ESTIMATE);
}

FourierWorkspace2D::~FourierWorkspace2D() { destroy(); }

FourierWorkspace2D::FourierWorkspace2D(FourierWorkspace2D&& other) noexcept
    : nx_(other.nx_),
      ny_(other.ny_),
      plan_fwd_(std::exchange(other.plan_fwd_, nullptr)),
      plan_bwd_(std::exchange(other.plan_bwd_, nullptr)),
      buffer_(std::exchange(other.buffer_, nullptr)) {}

FourierWorkspace2D& FourierWorkspace2D::operator=(
    FourierWorkspace2D&& other) noexcept {
  if (this != &other) {
    destroy();
    nx_ = other.nx_;
    ny_ = other.ny_;
    plan_fwd_ = std::exchange(other.plan_fwd_, nullptr);
    plan_bwd_ = std::exchange(other.plan_bwd_, nullptr);
    buffer_ = std::exchange(other.buffer_, nullptr);
  }
  return *this;
}

void FourierWorkspace2D::destroy() {
  if (!buffer_ && !plan_fwd_ && !plan_bwd_) return;
  std::lock_guard lock(planner_mutex());
  if (plan_fwd_) fftw_destroy_plan(static_cast<fftw_plan>(plan_fwd_));
  if (plan_bwd_) fftw_destroy_plan(static_cast<fftw_plan>(plan_bwd_));
  if (buffer_) fftw_free(buffer_);
  plan_fwd_ = plan_bwd_ = nullptr;
  buffer_ = nullptr;
}

void FourierWorkspace2D::forward(std::span<std::complex<double>> data) {
  const std::size_t total = nx_ * ny_;
  if (data.size() != total)
    throw std::invalid_argument("FourierWorkspace2D: size mismatch");
  std::memcpy(buffer_, data.data(), total * sizeof(std::complex<double>));
  fftw_execute(static_cast<fftw_plan>(plan_fwd_));
  std::memcpy(data.data(), buffer_, total * sizeof(std::complex<double>));
}

void FourierWorkspace2D::inverse(std::span<std::complex<double>> data) {
  const std::size_t total = nx_ * ny_;
  if (data.size() != total)
    throw std::invalid_argument("FourierWorkspace2D: size mismatch");
  std::memcpy(buffer_, data.data(), total * sizeof(std::complex<double>));
  fftw_execute(static_cast<fftw_plan>(plan_bwd_));
  const double scale = 1.0 / static_cast<double>(total);
  for (std::size_t j = 0; j < total; ++j) data[j] = buffer_[j] * scale;
}

}  // namespace wavelab
