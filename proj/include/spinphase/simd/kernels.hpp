#pragma once
// Complex-vector kernels used by the matrix-free Hamiltonian and the Krylov
// solver. Every kernel has a scalar reference implementation; wider variants
// are selected at runtime and must agree with the reference to rounding.

#include <complex>
#include <cstddef>
#include <cstdint>
#include <string_view>

namespace spinphase::simd {

using Complex = std::complex<double>;

struct KernelTable {
  std::string_view name;

  // sum_k conj(x[k]) * y[k]
  Complex (*dotc)(const Complex* x, const Complex* y, std::size_t n);
  // sum_k |x[k]|^2
  double (*norm_sq)(const Complex* x, std::size_t n);
  // y += a * x
  void (*axpy)(Complex a, const Complex* x, Complex* y, std::size_t n);
  // x *= a
  void (*scale)(Complex a, Complex* x, std::size_t n);
  // y += d .* x  (real diagonal)
  void (*diag_axpy)(const double* d, const Complex* x, Complex* y, std::size_t n);
  // x .*= p
  void (*phase_mul)(const Complex* p, Complex* x, std::size_t n);
  // y[s] += c(s) * x[s ^ mask], c(s) = c_equal when bits bit_a and bit_b of s
  // agree, c_differ otherwise. n must be a power of two covering mask.
  void (*flip_axpy)(const Complex* x, Complex* y, std::size_t n, std::uint64_t mask,
                    unsigned bit_a, unsigned bit_b, double c_equal, double c_differ);
};

const KernelTable& scalar_kernels() noexcept;

// nullptr when the variant was not compiled in or the CPU lacks the ISA.
const KernelTable* avx2_kernels() noexcept;

// Table used by the library. Chosen once: SPINPHASE_SIMD=scalar|avx2 forces a
// variant, otherwise the widest supported one wins.
const KernelTable& active_kernels() noexcept;

}  // namespace spinphase::simd
