#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include <Eigen/Eigenvalues>

#include "spinphase/eigensolve.hpp"
#include "spinphase/entangle.hpp"
#include "spinphase/error.hpp"
#include "support.hpp"

using namespace spinphase;
using Eigen::Matrix4cd;

namespace {

Matrix4cd projector(const Eigen::Vector4cd& v) { return v * v.adjoint(); }

Eigen::Vector4cd singlet() {
  const double s = 1.0 / std::sqrt(2.0);
  return Eigen::Vector4cd(0, s, -s, 0);
}

Matrix4cd werner(double p) {
  return p * projector(singlet()) + (1.0 - p) * Matrix4cd::Identity() / 4.0;
}

// Brute force: square roots of the (non-Hermitian) eigenvalues of rho rho~.
double wootters_oracle(const Matrix4cd& rho) {
  Eigen::Matrix2cd sy;
  sy << 0, Complex(0, -1), Complex(0, 1), 0;
  Matrix4cd yy;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) yy(r, c) = sy(r / 2, c / 2) * sy(r % 2, c % 2);
  const Matrix4cd tilde = yy * rho.conjugate() * yy;
  Eigen::ComplexEigenSolver<Matrix4cd> es(rho * tilde);
  std::vector<double> l;
  for (int k = 0; k < 4; ++k) l.push_back(std::sqrt(std::max(0.0, es.eigenvalues()(k).real())));
  std::sort(l.rbegin(), l.rend());
  return std::max(0.0, l[0] - l[1] - l[2] - l[3]);
}

Matrix4cd partial_trace_oracle(const StateVector& s, int i, int j) {
  Matrix4cd rho = Matrix4cd::Zero();
  const std::size_t mi = std::size_t{1} << i, mj = std::size_t{1} << j;
  for (std::size_t a = 0; a < s.dim(); ++a) {
    for (std::size_t b = 0; b < s.dim(); ++b) {
      if ((a & ~(mi | mj)) != (b & ~(mi | mj))) continue;
      const int ra = static_cast<int>((((a & mi) ? 1 : 0) << 1) | ((a & mj) ? 1 : 0));
      const int rb = static_cast<int>((((b & mi) ? 1 : 0) << 1) | ((b & mj) ? 1 : 0));
      rho(ra, rb) += s[a] * std::conj(s[b]);
    }
  }
  return rho;
}

}  // namespace

TEST_CASE("Wootters examples") {
  CHECK(wootters_concurrence(projector(singlet())) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(wootters_concurrence(Matrix4cd::Identity() / 4.0)) < 1e-12);
  CHECK(wootters_concurrence(werner(0.5)) == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(wootters_oracle(werner(0.5)) == doctest::Approx(0.25).epsilon(1e-10));
}

TEST_CASE("pure_concurrence examples") {
  const double s = 1.0 / std::sqrt(2.0);
  CHECK(pure_concurrence(s, s) == doctest::Approx(1.0));
  CHECK(pure_concurrence(1.0, 0.0) == 0.0);
  const double theta = std::numbers::pi / 2;
  const double a = std::sqrt(2.0) * std::pow(std::cos(theta / 4), 2);
  const double b = std::sqrt(2.0) * std::pow(std::sin(theta / 4), 2);
  CHECK(pure_concurrence(a, b) == doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("density matrix validation") {
  Matrix4cd bad = Matrix4cd::Identity() / 4.0;
  bad(0, 1) = 0.1;
  CHECK_THROWS_AS(wootters_concurrence(bad), InvalidArgument);
  CHECK_THROWS_AS(check_density_matrix(Matrix4cd::Identity()), InvalidArgument);
  Matrix4cd negative = Matrix4cd::Zero();
  negative(0, 0) = 1.5;
  negative(1, 1) = -0.5;
  CHECK_THROWS_AS(check_density_matrix(negative), InvalidArgument);
  CHECK_NOTHROW(check_density_matrix(werner(0.3)));
}

TEST_CASE("reduced density matrix examples") {
  StateVector s2(2);
  s2[1] = 1.0 / std::sqrt(2.0);
  s2[2] = -1.0 / std::sqrt(2.0);
  const auto r2 = reduced_density_matrix(s2, 0, 1);
  CHECK((r2.rho - projector(singlet())).cwiseAbs().maxCoeff() < 1e-15);
  CHECK((r2.rho * r2.rho).trace().real() == doctest::Approx(1.0));

  const auto r3 = reduced_density_matrix(StateVector::basis(3, 0), 0, 2);
  Matrix4cd uu = Matrix4cd::Zero();
  uu(0, 0) = 1.0;
  CHECK((r3.rho - uu).cwiseAbs().maxCoeff() < 1e-15);

  const auto eig = dense_eigh(dense_hamiltonian(ChainSpec::heisenberg(4)));
  const Eigen::VectorXcd g = eig.vectors.col(0);
  const StateVector ground(4, std::vector<Complex>(g.data(), g.data() + g.size()));
  const auto r4 = reduced_density_matrix(ground, 0, 1);
  const Matrix4cd oracle = partial_trace_oracle(ground, 0, 1);
  CHECK((r4.rho - oracle).cwiseAbs().maxCoeff() < 1e-13);
  CHECK((r4.rho * r4.rho).trace().real() ==
        doctest::Approx((oracle * oracle).trace().real()).epsilon(1e-12));
  CHECK(wootters_concurrence(r4) == doctest::Approx(0.5).epsilon(1e-10));

  CHECK_THROWS_AS(reduced_density_matrix(ground, 1, 1), InvalidArgument);
  CHECK_THROWS_AS(reduced_density_matrix(ground, 0, 4), InvalidArgument);
}

TEST_CASE("property: reduced density matrix equals brute-force partial trace, N <= 5") {
  std::mt19937_64 rng(77);
  for (int n = 2; n <= 5; ++n) {
    const auto s = testing::random_state(n, rng);
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        CAPTURE(n);
        CAPTURE(i);
        CAPTURE(j);
        CHECK((reduced_density_matrix(s, i, j).rho - partial_trace_oracle(s, i, j))
                  .cwiseAbs()
                  .maxCoeff() < 1e-13);
      }
    }
  }
}

TEST_CASE("property: Wootters matches the brute-force oracle on random mixed states") {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 50; ++trial) {
    // Full rank: the oracle's square roots lose precision near zero eigenvalues.
    Eigen::Matrix4cd a;
    std::normal_distribution<double> g;
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c) a(r, c) = {g(rng), g(rng)};
    Matrix4cd rho = a * a.adjoint();
    rho /= rho.trace();
    CHECK(std::abs(wootters_concurrence(rho) - wootters_oracle(rho)) < 1e-10);
  }
}

TEST_CASE("property: pure-state equivalence for 100 random pairs") {
  std::mt19937_64 rng(100);
  std::normal_distribution<double> g;
  for (int trial = 0; trial < 100; ++trial) {
    Complex a{g(rng), g(rng)}, b{g(rng), g(rng)};
    const double nrm = std::sqrt(std::norm(a) + std::norm(b));
    a /= nrm;
    b /= nrm;
    const Matrix4cd rho = projector(Eigen::Vector4cd(0, a, -b, 0));
    CHECK(std::abs(wootters_concurrence(rho) - pure_concurrence(a, b)) < 1e-10);
  }
}

TEST_CASE("property: local-unitary invariance") {
  std::mt19937_64 rng(55);
  for (int trial = 0; trial < 30; ++trial) {
    Eigen::Matrix<Complex, 4, 2> a;
    std::normal_distribution<double> g;
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 2; ++c) a(r, c) = {g(rng), g(rng)};
    Matrix4cd rho = a * a.adjoint();
    rho /= rho.trace();
    const Eigen::Matrix2cd u = testing::random_unitary(rng), v = testing::random_unitary(rng);
    Matrix4cd uv;
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c) uv(r, c) = u(r / 2, c / 2) * v(r % 2, c % 2);
    const Matrix4cd rotated = uv * rho * uv.adjoint();
    CHECK(std::abs(wootters_concurrence(rho) - wootters_concurrence(rotated)) < 1e-10);
  }
}

TEST_CASE("property: Werner monotonicity") {
  double prev = 2.0;
  for (int k = 0; k < 20; ++k) {
    const double p = 1.0 - k * (1.0 - 1.0 / 3.0) / 19.0;
    const double c = wootters_concurrence(werner(p));
    CHECK(c <= prev + 1e-12);
    CHECK(c == doctest::Approx(std::max(0.0, (3 * p - 1) / 2)).epsilon(1e-10));
    prev = c;
  }
  for (double p : {0.0, 0.1, 0.2, 0.33}) CHECK(wootters_concurrence(werner(p)) == 0.0);
  CHECK(wootters_concurrence(werner(1.0 / 3.0)) < 1e-12);
}
