#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "spinphase/simd/kernels.hpp"
#include "support.hpp"

using namespace spinphase;
using simd::KernelTable;

namespace {

double max_diff(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  return testing::max_abs_diff(a, b);
}

std::vector<double> random_reals(std::size_t n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  std::vector<double> v(n);
  for (auto& x : v) x = u(rng);
  return v;
}

}  // namespace

TEST_CASE("scalar table is always available") {
  CHECK(simd::scalar_kernels().name == "scalar");
  CHECK(!simd::active_kernels().name.empty());
}

TEST_CASE("avx2 kernels match the scalar reference") {
  const KernelTable* wide = simd::avx2_kernels();
  if (!wide) {
    MESSAGE("AVX2 not available on this CPU; equivalence test skipped");
    return;
  }
  const KernelTable& ref = simd::scalar_kernels();
  std::mt19937_64 rng(7);

  for (std::size_t n : {1u, 2u, 3u, 7u, 8u, 64u, 1023u, 4096u}) {
    CAPTURE(n);
    const auto x = testing::random_amplitudes(n, rng);
    const auto y = testing::random_amplitudes(n, rng);
    const double scale = std::sqrt(static_cast<double>(n));

    CHECK(std::abs(ref.dotc(x.data(), y.data(), n) - wide->dotc(x.data(), y.data(), n)) <=
          1e-13 * scale * 4);
    CHECK(std::abs(ref.norm_sq(x.data(), n) - wide->norm_sq(x.data(), n)) <= 1e-13 * scale * 4);

    const Complex a{0.3, -1.7};
    auto y1 = y, y2 = y;
    ref.axpy(a, x.data(), y1.data(), n);
    wide->axpy(a, x.data(), y2.data(), n);
    CHECK(max_diff(y1, y2) <= 1e-14);

    auto x1 = x, x2 = x;
    ref.scale(a, x1.data(), n);
    wide->scale(a, x2.data(), n);
    CHECK(max_diff(x1, x2) <= 1e-14);

    const auto d = random_reals(n, rng);
    y1 = y, y2 = y;
    ref.diag_axpy(d.data(), x.data(), y1.data(), n);
    wide->diag_axpy(d.data(), x.data(), y2.data(), n);
    CHECK(max_diff(y1, y2) <= 1e-14);

    const auto p = testing::random_amplitudes(n, rng);
    x1 = x, x2 = x;
    ref.phase_mul(p.data(), x1.data(), n);
    wide->phase_mul(p.data(), x2.data(), n);
    CHECK(max_diff(x1, x2) <= 1e-14);
  }
}

TEST_CASE("avx2 flip_axpy matches the scalar reference for every bond") {
  const KernelTable* wide = simd::avx2_kernels();
  if (!wide) return;
  const KernelTable& ref = simd::scalar_kernels();
  std::mt19937_64 rng(11);
  for (unsigned nbits : {2u, 3u, 6u, 10u}) {
    const std::size_t n = std::size_t{1} << nbits;
    const auto x = testing::random_amplitudes(n, rng);
    const auto y = testing::random_amplitudes(n, rng);
    for (unsigned a = 0; a < nbits; ++a) {
      for (unsigned b = a + 1; b < nbits; ++b) {
        CAPTURE(nbits);
        CAPTURE(a);
        CAPTURE(b);
        const std::uint64_t mask = (std::uint64_t{1} << a) | (std::uint64_t{1} << b);
        auto y1 = y, y2 = y;
        ref.flip_axpy(x.data(), y1.data(), n, mask, a, b, -0.4, 0.9);
        wide->flip_axpy(x.data(), y2.data(), n, mask, a, b, -0.4, 0.9);
        CHECK(max_diff(y1, y2) <= 1e-14);
      }
    }
  }
}

TEST_CASE("scalar flip_axpy against a direct loop") {
  const KernelTable& ref = simd::scalar_kernels();
  std::mt19937_64 rng(3);
  const std::size_t n = 32;
  const auto x = testing::random_amplitudes(n, rng);
  auto y = testing::random_amplitudes(n, rng);
  auto expect = y;
  const unsigned a = 1, b = 4;
  const std::uint64_t mask = (1u << a) | (1u << b);
  for (std::size_t s = 0; s < n; ++s) {
    const bool equal = ((s >> a) & 1u) == ((s >> b) & 1u);
    expect[s] += (equal ? 0.25 : -1.5) * x[s ^ mask];
  }
  ref.flip_axpy(x.data(), y.data(), n, mask, a, b, 0.25, -1.5);
  CHECK(max_diff(y, expect) <= 1e-14);
}
