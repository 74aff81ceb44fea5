#include "gstab/fft.hpp"

#include <fftw3.h>

#include <mutex>
#include <stdexcept>

namespace gstab::fft {

namespace {

// FFTW plan creation is not thread-safe; execution of a plan is.
std::mutex& plan_mutex() {
    static std::mutex m;
    return m;
}

void transform1d(std::vector<std::complex<double>>& a, int sign) {
    if (a.empty()) return;
    auto* data = reinterpret_cast<fftw_complex*>(a.data());
    fftw_plan plan;
    {
        std::lock_guard<std::mutex> lock(plan_mutex());
        plan = fftw_plan_dft_1d(static_cast<int>(a.size()), data, data, sign, FFTW_ESTIMATE);
    }
    if (!plan) throw std::runtime_error("fft: plan creation failed");
    fftw_execute(plan);
    std::lock_guard<std::mutex> lock(plan_mutex());
    fftw_destroy_plan(plan);
}

void transform2d(std::vector<std::complex<double>>& a, std::size_t n0, std::size_t n1, int sign) {
    if (a.size() != n0 * n1) throw std::invalid_argument("fft: 2d size mismatch");
    auto* data = reinterpret_cast<fftw_complex*>(a.data());
    fftw_plan plan;
    {
        std::lock_guard<std::mutex> lock(plan_mutex());
        plan = fftw_plan_dft_2d(static_cast<int>(n0), static_cast<int>(n1), data, data, sign,
                                FFTW_ESTIMATE);
    }
    if (!plan) throw std::runtime_error("fft: plan creation failed");
    fftw_execute(plan);
    std::lock_guard<std::mutex> lock(plan_mutex());
    fftw_destroy_plan(plan);
}

}  // namespace

void forward(std::vector<std::complex<double>>& a) { transform1d(a, FFTW_FORWARD); }
void inverse(std::vector<std::complex<double>>& a) { transform1d(a, FFTW_BACKWARD); }

void forward2d(std::vector<std::complex<double>>& a, std::size_t n0, std::size_t n1) {
    transform2d(a, n0, n1, FFTW_FORWARD);
}
void inverse2d(std::vector<std::complex<double>>& a, std::size_t n0, std::size_t n1) {
    transform2d(a, n0, n1, FFTW_BACKWARD);
}

std::size_t next_pow2(std::size_t n) {
    std::size_t p = 1;
    while (p < n) p <<= 1;
    return p;
}

std::vector<double> convolve_real(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.empty() || b.empty()) return {};
    const std::size_t full = a.size() + b.size() - 1;
    const std::size_t m = next_pow2(full);
    std::vector<std::complex<double>> fa(m), fb(m);
    for (std::size_t i = 0; i < a.size(); ++i) fa[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) fb[i] = b[i];
    forward(fa);
    forward(fb);
    for (std::size_t i = 0; i < m; ++i) fa[i] *= fb[i];
    inverse(fa);
    std::vector<double> out(full);
    const double scale = 1.0 / static_cast<double>(m);
    for (std::size_t i = 0; i < full; ++i) out[i] = fa[i].real() * scale;
    return out;
}

namespace {

template <typename T>
std::vector<T> conv2d_impl(const std::vector<T>& a, std::size_t na0, std::size_t na1,
                           const std::vector<double>& b, std::size_t nb0, std::size_t nb1) {
    if (a.size() != na0 * na1 || b.size() != nb0 * nb1)
        throw std::invalid_argument("fft: conv2d shape mismatch");
    const std::size_t f0 = na0 + nb0 - 1, f1 = na1 + nb1 - 1;
    const std::size_t m0 = next_pow2(f0), m1 = next_pow2(f1);
    std::vector<std::complex<double>> fa(m0 * m1), fb(m0 * m1);
    for (std::size_t i = 0; i < na0; ++i)
        for (std::size_t j = 0; j < na1; ++j) fa[i * m1 + j] = a[i * na1 + j];
    for (std::size_t i = 0; i < nb0; ++i)
        for (std::size_t j = 0; j < nb1; ++j) fb[i * m1 + j] = b[i * nb1 + j];
    forward2d(fa, m0, m1);
    forward2d(fb, m0, m1);
    for (std::size_t i = 0; i < fa.size(); ++i) fa[i] *= fb[i];
    inverse2d(fa, m0, m1);
    std::vector<T> out(f0 * f1);
    const double scale = 1.0 / static_cast<double>(m0 * m1);
    for (std::size_t i = 0; i < f0; ++i)
        for (std::size_t j = 0; j < f1; ++j) {
            const auto v = fa[i * m1 + j] * scale;
            if constexpr (std::is_same_v<T, double>)
                out[i * f1 + j] = v.real();
            else
                out[i * f1 + j] = v;
        }
    return out;
}

}  // namespace

std::vector<double> convolve_real2d(const std::vector<double>& a, std::size_t na0, std::size_t na1,
                                    const std::vector<double>& b, std::size_t nb0, std::size_t nb1) {
    return conv2d_impl<double>(a, na0, na1, b, nb0, nb1);
}

std::vector<std::complex<double>> convolve_cplx2d(const std::vector<std::complex<double>>& a,
                                                  std::size_t na0, std::size_t na1,
                                                  const std::vector<double>& b, std::size_t nb0,
                                                  std::size_t nb1) {
    return conv2d_impl<std::complex<double>>(a, na0, na1, b, nb0, nb1);
}

}  // namespace gstab::fft
