#include "spinphase/simd/kernels.hpp"

namespace spinphase::simd {
namespace {

Complex dotc_scalar(const Complex* x, const Complex* y, std::size_t n) {
  double re = 0.0;
  double im = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    re += x[k].real() * y[k].real() + x[k].imag() * y[k].imag();
    im += x[k].real() * y[k].imag() - x[k].imag() * y[k].real();
  }
  return {re, im};
}

double norm_sq_scalar(const Complex* x, std::size_t n) {
  double acc = 0.0;
  for (std::size_t k = 0; k < n; ++k) acc += std::norm(x[k]);
  return acc;
}

void axpy_scalar(Complex a, const Complex* x, Complex* y, std::size_t n) {
  for (std::size_t k = 0; k < n; ++k) y[k] += a * x[k];
}

void scale_scalar(Complex a, Complex* x, std::size_t n) {
  for (std::size_t k = 0; k < n; ++k) x[k] *= a;
}

void diag_axpy_scalar(const double* d, const Complex* x, Complex* y, std::size_t n) {
  for (std::size_t k = 0; k < n; ++k) y[k] += d[k] * x[k];
}

void phase_mul_scalar(const Complex* p, Complex* x, std::size_t n) {
  for (std::size_t k = 0; k < n; ++k) x[k] *= p[k];
}

void flip_axpy_scalar(const Complex* x, Complex* y, std::size_t n, std::uint64_t mask,
                      unsigned bit_a, unsigned bit_b, double c_equal, double c_differ) {
  for (std::size_t s = 0; s < n; ++s) {
    const bool equal = ((s >> bit_a) & 1U) == ((s >> bit_b) & 1U);
    const double c = equal ? c_equal : c_differ;
    if (c != 0.0) y[s] += c * x[s ^ mask];
  }
}

}  // namespace

const KernelTable& scalar_kernels() noexcept {
  static const KernelTable table{
      "scalar",         dotc_scalar,      norm_sq_scalar, axpy_scalar,
      scale_scalar,     diag_axpy_scalar, phase_mul_scalar, flip_axpy_scalar,
  };
  return table;
}

}  // namespace spinphase::simd
