#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace gstab::fft {

/// In-place complex DFT, forward sign convention e^{-2*pi*i*k*n/N}.
/// Backed by FFTW (ESTIMATE plans, single-threaded) so results are
/// reproducible run to run.
void forward(std::vector<std::complex<double>>& a);

/// In-place unnormalised inverse DFT (no 1/N factor applied).
void inverse(std::vector<std::complex<double>>& a);

/// 2-D row-major complex DFT of an n0 x n1 array.
void forward2d(std::vector<std::complex<double>>& a, std::size_t n0, std::size_t n1);
void inverse2d(std::vector<std::complex<double>>& a, std::size_t n0, std::size_t n1);

/// Smallest power of two >= n.
std::size_t next_pow2(std::size_t n);

/// Zero-padded linear convolution of two real arrays (full support,
/// size a+b-1), via the complex FFT above.
std::vector<double> convolve_real(const std::vector<double>& a, const std::vector<double>& b);

/// Zero-padded linear 2-D convolution of row-major real arrays,
/// result is (na0+nb0-1) x (na1+nb1-1).
std::vector<double> convolve_real2d(const std::vector<double>& a, std::size_t na0, std::size_t na1,
                                    const std::vector<double>& b, std::size_t nb0, std::size_t nb1);

/// Same, complex-valued input a with a real kernel b.
std::vector<std::complex<double>> convolve_cplx2d(const std::vector<std::complex<double>>& a,
                                                  std::size_t na0, std::size_t na1,
                                                  const std::vector<double>& b, std::size_t nb0,
                                                  std::size_t nb1);

}  // namespace gstab::fft
