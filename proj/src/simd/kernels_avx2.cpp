#include "spinphase/simd/kernels.hpp"

#if defined(__x86_64__) && (defined(__GNUC__) || defined(__clang__))
#define SPINPHASE_HAVE_AVX2_VARIANT 1
#include <immintrin.h>
#else
#define SPINPHASE_HAVE_AVX2_VARIANT 0
#endif

namespace spinphase::simd {

#if SPINPHASE_HAVE_AVX2_VARIANT

// Functions carry target attributes instead of a per-file -mavx2 so that no
// inline code from shared headers is emitted with AVX2 encodings.
#define SPINPHASE_AVX2 __attribute__((target("avx2,fma")))

namespace {

// A __m256d holds two complex<double> as [re0, im0, re1, im1].

SPINPHASE_AVX2 inline double hsum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

// a * x for complex a broadcast in (ar, ai) registers.
SPINPHASE_AVX2 inline __m256d cmul_bcast(__m256d ar, __m256d ai, __m256d x) {
  const __m256d xs = _mm256_permute_pd(x, 0b0101);
  return _mm256_addsub_pd(_mm256_mul_pd(ar, x), _mm256_mul_pd(ai, xs));
}

// Elementwise p * x.
SPINPHASE_AVX2 inline __m256d cmul(__m256d p, __m256d x) {
  const __m256d pr = _mm256_movedup_pd(p);
  const __m256d pi = _mm256_permute_pd(p, 0b1111);
  return cmul_bcast(pr, pi, x);
}

SPINPHASE_AVX2 Complex dotc_avx2(const Complex* x, const Complex* y, std::size_t n) {
  const auto* xp = reinterpret_cast<const double*>(x);
  const auto* yp = reinterpret_cast<const double*>(y);
  __m256d acc_re = _mm256_setzero_pd();  // xr*yr, xi*yi
  __m256d acc_im = _mm256_setzero_pd();  // xr*yi, xi*yr
  std::size_t k = 0;
  for (; k + 2 <= n; k += 2) {
    const __m256d xv = _mm256_loadu_pd(xp + 2 * k);
    const __m256d yv = _mm256_loadu_pd(yp + 2 * k);
    acc_re = _mm256_fmadd_pd(xv, yv, acc_re);
    acc_im = _mm256_fmadd_pd(xv, _mm256_permute_pd(yv, 0b0101), acc_im);
  }
  double re = hsum(acc_re);
  alignas(32) double im_lanes[4];
  _mm256_store_pd(im_lanes, acc_im);
  double im = (im_lanes[0] + im_lanes[2]) - (im_lanes[1] + im_lanes[3]);
  for (; k < n; ++k) {
    const double xr = xp[2 * k], xi = xp[2 * k + 1];
    const double yr = yp[2 * k], yi = yp[2 * k + 1];
    re += xr * yr + xi * yi;
    im += xr * yi - xi * yr;
  }
  return {re, im};
}

SPINPHASE_AVX2 double norm_sq_avx2(const Complex* x, std::size_t n) {
  const auto* xp = reinterpret_cast<const double*>(x);
  const std::size_t m = 2 * n;
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t k = 0;
  for (; k + 8 <= m; k += 8) {
    const __m256d a = _mm256_loadu_pd(xp + k);
    const __m256d b = _mm256_loadu_pd(xp + k + 4);
    acc0 = _mm256_fmadd_pd(a, a, acc0);
    acc1 = _mm256_fmadd_pd(b, b, acc1);
  }
  double acc = hsum(_mm256_add_pd(acc0, acc1));
  for (; k < m; ++k) acc += xp[k] * xp[k];
  return acc;
}

SPINPHASE_AVX2 void axpy_avx2(Complex a, const Complex* x, Complex* y, std::size_t n) {
  const auto* xp = reinterpret_cast<const double*>(x);
  auto* yp = reinterpret_cast<double*>(y);
  const __m256d ar = _mm256_set1_pd(a.real());
  const __m256d ai = _mm256_set1_pd(a.imag());
  std::size_t k = 0;
  for (; k + 2 <= n; k += 2) {
    const __m256d xv = _mm256_loadu_pd(xp + 2 * k);
    const __m256d yv = _mm256_loadu_pd(yp + 2 * k);
    _mm256_storeu_pd(yp + 2 * k, _mm256_add_pd(yv, cmul_bcast(ar, ai, xv)));
  }
  for (; k < n; ++k) {
    const double xr = xp[2 * k], xi = xp[2 * k + 1];
    yp[2 * k] += a.real() * xr - a.imag() * xi;
    yp[2 * k + 1] += a.real() * xi + a.imag() * xr;
  }
}

SPINPHASE_AVX2 void scale_avx2(Complex a, Complex* x, std::size_t n) {
  auto* xp = reinterpret_cast<double*>(x);
  const __m256d ar = _mm256_set1_pd(a.real());
  const __m256d ai = _mm256_set1_pd(a.imag());
  std::size_t k = 0;
  for (; k + 2 <= n; k += 2) {
    const __m256d xv = _mm256_loadu_pd(xp + 2 * k);
    _mm256_storeu_pd(xp + 2 * k, cmul_bcast(ar, ai, xv));
  }
  for (; k < n; ++k) {
    const double xr = xp[2 * k], xi = xp[2 * k + 1];
    xp[2 * k] = a.real() * xr - a.imag() * xi;
    xp[2 * k + 1] = a.real() * xi + a.imag() * xr;
  }
}

SPINPHASE_AVX2 void diag_axpy_avx2(const double* d, const Complex* x, Complex* y,
                                   std::size_t n) {
  const auto* xp = reinterpret_cast<const double*>(x);
  auto* yp = reinterpret_cast<double*>(y);
  std::size_t k = 0;
  for (; k + 2 <= n; k += 2) {
    const __m128d dd = _mm_loadu_pd(d + k);
    const __m256d dv = _mm256_permute4x64_pd(_mm256_castpd128_pd256(dd), 0x50);
    const __m256d xv = _mm256_loadu_pd(xp + 2 * k);
    const __m256d yv = _mm256_loadu_pd(yp + 2 * k);
    _mm256_storeu_pd(yp + 2 * k, _mm256_fmadd_pd(dv, xv, yv));
  }
  for (; k < n; ++k) {
    yp[2 * k] += d[k] * xp[2 * k];
    yp[2 * k + 1] += d[k] * xp[2 * k + 1];
  }
}

SPINPHASE_AVX2 void phase_mul_avx2(const Complex* p, Complex* x, std::size_t n) {
  const auto* pp = reinterpret_cast<const double*>(p);
  auto* xp = reinterpret_cast<double*>(x);
  std::size_t k = 0;
  for (; k + 2 <= n; k += 2) {
    const __m256d pv = _mm256_loadu_pd(pp + 2 * k);
    const __m256d xv = _mm256_loadu_pd(xp + 2 * k);
    _mm256_storeu_pd(xp + 2 * k, cmul(pv, xv));
  }
  for (; k < n; ++k) {
    const double pr = pp[2 * k], pi = pp[2 * k + 1];
    const double xr = xp[2 * k], xi = xp[2 * k + 1];
    xp[2 * k] = pr * xr - pi * xi;
    xp[2 * k + 1] = pr * xi + pi * xr;
  }
}

SPINPHASE_AVX2 void flip_axpy_avx2(const Complex* x, Complex* y, std::size_t n,
                                   std::uint64_t mask, unsigned bit_a, unsigned bit_b,
                                   double c_equal, double c_differ) {
  const auto* xp = reinterpret_cast<const double*>(x);
  auto* yp = reinterpret_cast<double*>(y);
  if ((mask & 1U) != 0 || bit_a == 0 || bit_b == 0 || n < 2) {
    // Pairs (s, s+1) no longer map to adjacent sources; use the reference path.
    for (std::size_t s = 0; s < n; ++s) {
      const bool equal = ((s >> bit_a) & 1U) == ((s >> bit_b) & 1U);
      const double c = equal ? c_equal : c_differ;
      if (c == 0.0) continue;
      const std::size_t t = s ^ mask;
      yp[2 * s] += c * xp[2 * t];
      yp[2 * s + 1] += c * xp[2 * t + 1];
    }
    return;
  }
  // Bits a, b >= 1: s and s+1 share the coefficient and their sources are adjacent.
  for (std::size_t s = 0; s < n; s += 2) {
    const bool equal = ((s >> bit_a) & 1U) == ((s >> bit_b) & 1U);
    const double c = equal ? c_equal : c_differ;
    if (c == 0.0) continue;
    const std::size_t t = s ^ mask;
    const __m256d xv = _mm256_loadu_pd(xp + 2 * t);
    const __m256d yv = _mm256_loadu_pd(yp + 2 * s);
    _mm256_storeu_pd(yp + 2 * s, _mm256_fmadd_pd(_mm256_set1_pd(c), xv, yv));
  }
}

}  // namespace

const KernelTable* avx2_kernels() noexcept {
  static const bool supported =
      __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
  static const KernelTable table{
      "avx2",     dotc_avx2,      norm_sq_avx2,   axpy_avx2,
      scale_avx2, diag_axpy_avx2, phase_mul_avx2, flip_axpy_avx2,
  };
  return supported ? &table : nullptr;
}

#else

const KernelTable* avx2_kernels() noexcept { return nullptr; }

#endif

}  // namespace spinphase::simd
