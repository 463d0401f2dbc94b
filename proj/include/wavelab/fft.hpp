#ifndef WAVELAB_FFT_HPP
#define WAVELAB_FFT_HPP

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace wavelab {

/// Discrete Fourier transform pair used throughout the library, backed by
/// FFTW. Sign and scaling convention (pinned here, everything else derives
/// from it):
///
///   forward:  c_m = sum_j psi_j exp(-2 pi i j m / n)     (unnormalized)
///   inverse:  psi_j = (1/n) sum_m c_m exp(+2 pi i j m / n)
///
/// so inverse(forward(psi)) = psi and a plane wave exp(+i k_m x) lands in
/// bin m of the grid's wavenumber ladder. With the physical scaling
/// psi_tilde_m = dx * c_m the discrete Parseval identity reads
///
///   sum_m |psi_tilde_m|^2 dk = 2 pi * sum_j |psi_j|^2 dx,   dk = 2 pi / L,
///
/// matching the continuum convention g(k) = integral psi(x) e^{-ikx} dx.
///
/// A workspace owns its FFTW plans and scratch buffer; it is cheap to keep
/// per evolution and must not be shared between threads.
class FourierWorkspace {
 public:
  explicit FourierWorkspace(std::size_t n);
  ~FourierWorkspace();

  FourierWorkspace(const FourierWorkspace&) = delete;
  FourierWorkspace& operator=(const FourierWorkspace&) = delete;
  FourierWorkspace(FourierWorkspace&&) noexcept;
  FourierWorkspace& operator=(FourierWorkspace&&) noexcept;

  std::size_t size() const { return n_; }

  void forward(std::span<std::complex<double>> data);
  void inverse(std::span<std::complex<double>> data);

 private:
  void destroy();

  std::size_t n_ = 0;
  void* plan_fwd_ = nullptr;
  void* plan_bwd_ = nullptr;
  std::complex<double>* buffer_ = nullptr;
};

/// Row-major (x-major) 2D transform with the same convention per axis.
class FourierWorkspace2D {
 public:
  FourierWorkspace2D(std::size_t nx, std::size_t ny);
  ~FourierWorkspace2D();

  FourierWorkspace2D(const FourierWorkspace2D&) = delete;
  FourierWorkspace2D& operator=(const FourierWorkspace2D&) = delete;
  FourierWorkspace2D(FourierWorkspace2D&&) noexcept;
  FourierWorkspace2D& operator=(FourierWorkspace2D&&) noexcept;

  void forward(std::span<std::complex<double>> data);
  void inverse(std::span<std::complex<double>> data);

 private:
  void destroy();

  std::size_t nx_ = 0;
  std::size_t ny_ = 0;
  void* plan_fwd_ = nullptr;
  void* plan_bwd_ = nullptr;
  std::complex<double>* buffer_ = nullptr;
};

}  // namespace wavelab

#endif  // WAVELAB_FFT_HPP
