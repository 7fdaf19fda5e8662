#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>
#include <numbers>
#include <random>

#include "spinphase/eigensolve.hpp"
#include "spinphase/error.hpp"
#include "spinphase/spin_model.hpp"
#include "support.hpp"

using namespace spinphase;
using std::numbers::pi;

namespace {

std::vector<ChainSpec> spec_matrix(int max_n) {
  std::vector<ChainSpec> specs;
  for (int n = 2; n <= max_n; ++n) {
    for (auto boundary : {Boundary::Open, Boundary::Periodic}) {
      if (n == 2 && boundary == Boundary::Periodic) continue;
      specs.push_back(ChainSpec::heisenberg(n, boundary));
      for (double gamma : {0.0, 0.4, 1.0}) {
        for (double lambda : {0.0, 0.7, 1.0, 2.5}) {
          specs.push_back(ChainSpec::transverse_xy(n, gamma, lambda, boundary));
        }
      }
    }
  }
  return specs;
}

std::string describe(const ChainSpec& s) {
  return (s.model == Model::HeisenbergAFM ? "heisenberg" : "xy") + std::string(" n=") +
         std::to_string(s.n_sites) + (s.boundary == Boundary::Open ? " open" : " periodic") +
         " gamma=" + std::to_string(s.gamma) + " lambda=" + std::to_string(s.lambda);
}

}  // namespace

TEST_CASE("spec validation") {
  CHECK_THROWS_AS(ChainSpec::heisenberg(2, Boundary::Periodic), InvalidArgument);
  CHECK_THROWS_AS(ChainSpec::transverse_xy(4, 1.5, 1.0), InvalidArgument);
  CHECK_THROWS_AS(ChainSpec::transverse_xy(4, 1.0, -0.1), InvalidArgument);
  CHECK_THROWS_AS(ChainSpec::transverse_xy(4, 1.0, 1.0, Boundary::Periodic, 4.0), InvalidArgument);
  CHECK_THROWS_AS(ChainSpec::transverse_xy(0, 1.0, 1.0, Boundary::Open), InvalidArgument);
  CHECK_NOTHROW(ChainSpec::heisenberg(2, Boundary::Open));
  CHECK(ChainSpec::heisenberg(4).bonds().size() == 4);
  CHECK(ChainSpec::heisenberg(4, Boundary::Open).bonds().size() == 3);
}

TEST_CASE("field-only chain: all-up state has energy -N") {
  for (int n : {1, 3, 6}) {
    const auto spec = ChainSpec::transverse_xy(n, 1.0, 0.0, n == 1 ? Boundary::Open : Boundary::Periodic);
    const auto up = StateVector::basis(n, 0);
    const auto out = apply_hamiltonian(spec, up);
    for (std::size_t k = 0; k < out.dim(); ++k) {
      CHECK(std::abs(out[k] - (k == 0 ? Complex(-n) : Complex(0))) < 1e-14);
    }
  }
}

TEST_CASE("two-site singlet is a Heisenberg eigenvector with -3/4") {
  const auto spec = ChainSpec::heisenberg(2, Boundary::Open);
  StateVector singlet(2);
  singlet[1] = 1.0 / std::sqrt(2.0);
  singlet[2] = -1.0 / std::sqrt(2.0);
  const auto out = apply_hamiltonian(spec, singlet);
  for (std::size_t k = 0; k < 4; ++k) CHECK(std::abs(out[k] + 0.75 * singlet[k]) < 1e-15);
}

TEST_CASE("rotation examples") {
  std::mt19937_64 rng(5);
  const auto x = testing::random_state(4, rng);
  CHECK(testing::max_abs_diff(apply_rotation(x, 0.0).amplitudes(), x.amplitudes()) == 0.0);
  CHECK(testing::max_abs_diff(apply_rotation(x, 2 * pi).amplitudes(), x.amplitudes()) < 1e-14);

  StateVector plus(1);
  plus[0] = plus[1] = 1.0 / std::sqrt(2.0);
  const auto r = apply_rotation(plus, pi / 2);
  CHECK(std::abs(r[0] - std::polar(1.0 / std::sqrt(2.0), pi / 4)) < 1e-15);
  CHECK(std::abs(r[1] - std::polar(1.0 / std::sqrt(2.0), -pi / 4)) < 1e-15);
}

TEST_CASE("rotated Hamiltonian") {
  std::mt19937_64 rng(9);
  SUBCASE("phi = 0 reproduces H exactly") {
    const auto spec = ChainSpec::transverse_xy(6, 0.6, 1.3);
    const auto x = testing::random_state(6, rng);
    CHECK(testing::max_abs_diff(rotated_hamiltonian_apply(spec, x).amplitudes(),
                                apply_hamiltonian(spec, x).amplitudes()) == 0.0);
  }
  SUBCASE("expectation values are real for any phi") {
    for (double phi : {0.1, 0.9, pi / 2, 2.0, pi}) {
      const auto spec = ChainSpec::transverse_xy(7, 0.5, 1.1, Boundary::Periodic, phi);
      const auto x = testing::random_state(7, rng);
      CHECK(std::abs(inner(x, rotated_hamiltonian_apply(spec, x)).imag()) < 1e-12);
    }
  }
  SUBCASE("rotation leaves the spectrum unchanged") {
    const auto spec = ChainSpec::transverse_xy(8, 1.0, 1.0, Boundary::Periodic, pi / 3);
    const RotatedHamiltonianOperator hphi(spec);
    const HamiltonianOperator h(spec);
    const double e_phi = ground_state(hphi.as_operator(), hphi.dim()).energy;
    const double e0 = ground_state(h.as_operator(), h.dim()).energy;
    CHECK(std::abs(e_phi - e0) < 1e-10);
  }
}

TEST_CASE("property: Hermiticity for N <= 10") {
  std::mt19937_64 rng(21);
  for (const auto& spec : spec_matrix(10)) {
    if (spec.n_sites % 3 != 1 && spec.n_sites > 4) continue;  // sample the larger sizes
    CAPTURE(describe(spec));
    const HamiltonianOperator h(spec);
    const auto x = testing::random_state(spec.n_sites, rng);
    const auto y = testing::random_state(spec.n_sites, rng);
    StateVector hx(spec.n_sites), hy(spec.n_sites);
    h.apply(x.amplitudes(), hx.amplitudes());
    h.apply(y.amplitudes(), hy.amplitudes());
    CHECK(std::abs(inner(x, hy) - std::conj(inner(y, hx))) < 1e-12);
  }
  // Rotated family as well.
  for (double phi : {0.3, 1.9}) {
    const auto spec = ChainSpec::transverse_xy(9, 0.7, 0.8, Boundary::Periodic, phi);
    const auto x = testing::random_state(9, rng);
    const auto y = testing::random_state(9, rng);
    const auto hx = rotated_hamiltonian_apply(spec, x);
    const auto hy = rotated_hamiltonian_apply(spec, y);
    CHECK(std::abs(inner(x, hy) - std::conj(inner(y, hx))) < 1e-12);
  }
}

TEST_CASE("property: linearity") {
  std::mt19937_64 rng(33);
  const Complex alpha{0.7, -0.2}, beta{-1.1, 0.4};
  for (const auto& spec : spec_matrix(7)) {
    if (spec.n_sites < 5) continue;
    CAPTURE(describe(spec));
    const HamiltonianOperator h(spec);
    const auto x = testing::random_state(spec.n_sites, rng);
    const auto y = testing::random_state(spec.n_sites, rng);
    std::vector<Complex> combo(h.dim()), lhs(h.dim()), hx(h.dim()), hy(h.dim());
    for (std::size_t k = 0; k < h.dim(); ++k) combo[k] = alpha * x[k] + beta * y[k];
    h.apply(combo, lhs);
    h.apply(x.amplitudes(), hx);
    h.apply(y.amplitudes(), hy);
    double err = 0.0;
    for (std::size_t k = 0; k < h.dim(); ++k) {
      err = std::max(err, std::abs(lhs[k] - (alpha * hx[k] + beta * hy[k])));
    }
    CHECK(err < 1e-12);
  }
}

TEST_CASE("property: matrix-free action equals the dense Kronecker build for N <= 6") {
  for (const auto& spec : spec_matrix(6)) {
    CAPTURE(describe(spec));
    const HamiltonianOperator h(spec);
    const Eigen::MatrixXcd dense = dense_hamiltonian(spec);
    REQUIRE(static_cast<std::size_t>(dense.rows()) == h.dim());
    double err = 0.0;
    std::vector<Complex> e(h.dim()), col(h.dim());
    for (std::size_t c = 0; c < h.dim(); ++c) {
      std::fill(e.begin(), e.end(), Complex{});
      e[c] = 1.0;
      h.apply(e, col);
      for (std::size_t r = 0; r < h.dim(); ++r) {
        err = std::max(err, std::abs(col[r] - dense(static_cast<Eigen::Index>(r),
                                                    static_cast<Eigen::Index>(c))));
      }
    }
    CHECK(err <= 1e-13);
  }
}

TEST_CASE("property: Heisenberg conserves total Sz exactly") {
  for (int n : {4, 7, 10}) {
    const HamiltonianOperator h(ChainSpec::heisenberg(n, Boundary::Periodic));
    std::mt19937_64 rng(n);
    for (int sector = 0; sector <= n; ++sector) {
      std::vector<Complex> x(h.dim()), y(h.dim());
      auto amps = testing::random_amplitudes(h.dim(), rng);
      for (std::size_t s = 0; s < h.dim(); ++s) {
        if (std::popcount(s) == sector) x[s] = amps[s];
      }
      h.apply(x, y);
      for (std::size_t s = 0; s < h.dim(); ++s) {
        if (std::popcount(s) != sector) REQUIRE(y[s] == Complex{});
      }
    }
  }
}

TEST_CASE("transverse Ising two-site open chain energy") {
  const Eigen::MatrixXcd dense = dense_hamiltonian(ChainSpec::transverse_xy(2, 1.0, 1.0, Boundary::Open));
  const auto eig = dense_eigh(dense);
  CHECK(eig.values(0) == doctest::Approx(-std::sqrt(5.0)).epsilon(1e-14));
}
