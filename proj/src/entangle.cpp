#include "spinphase/entangle.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/SVD>

#include "spinphase/eigensolve.hpp"
#include "spinphase/error.hpp"

namespace spinphase {

void check_density_matrix(const Eigen::Matrix4cd& rho, double tol) {
  const double asym = (rho - rho.adjoint()).cwiseAbs().maxCoeff();
  if (asym > tol) throw InvalidArgument("density matrix not Hermitian: " + std::to_string(asym));
  const Complex tr = rho.trace();
  if (std::abs(tr - 1.0) > tol) {
    throw InvalidArgument("density matrix trace " + std::to_string(tr.real()) + " != 1");
  }
  const auto eig = dense_eigh(0.5 * (rho + rho.adjoint()));
  if (eig.values(0) < -tol) {
    throw InvalidArgument("density matrix has negative eigenvalue " +
                          std::to_string(eig.values(0)));
  }
}

DensityMatrix4 reduced_density_matrix(const StateVector& state, int i, int j) {
  const int n = state.n_sites();
  if (i < 0 || j < 0 || i >= n || j >= n) {
    throw InvalidArgument("site index out of range for " + std::to_string(n) + " sites");
  }
  if (i == j) throw InvalidArgument("reduced density matrix needs two distinct sites");
  if (i > j) std::swap(i, j);

  const std::uint64_t bi = std::uint64_t{1} << i;
  const std::uint64_t bj = std::uint64_t{1} << j;
  const std::size_t offsets[4] = {0, bj, bi, bi | bj};

  DensityMatrix4 out;
  out.site_i = i;
  out.site_j = j;
  const auto amp = state.amplitudes();
  for (std::size_t s = 0; s < amp.size(); ++s) {
    if ((s & (bi | bj)) != 0) continue;
    Eigen::Vector4cd v;
    for (int q = 0; q < 4; ++q) v(q) = amp[s | offsets[q]];
    out.rho.noalias() += v * v.adjoint();
  }
  return out;
}

double wootters_concurrence(const DensityMatrix4& rho) { return wootters_concurrence(rho.rho); }

double wootters_concurrence(const Eigen::Matrix4cd& rho_in) {
  check_density_matrix(rho_in);
  const Eigen::Matrix4cd rho = 0.5 * (rho_in + rho_in.adjoint());

  // sigma^y (x) sigma^y in this basis is the anti-diagonal (-1, 1, 1, -1).
  Eigen::Matrix4cd yy = Eigen::Matrix4cd::Zero();
  yy(0, 3) = -1.0;
  yy(1, 2) = 1.0;
  yy(2, 1) = 1.0;
  yy(3, 0) = -1.0;

  // rho = S^2 with S Hermitian. The spin-flip eigenvalues lambda_i^2 of
  // rho * (yy rho* yy) are the squared singular values of S yy S*, which
  // avoids square-rooting eigenvalues that are zero up to rounding.
  const auto eig = dense_eigh(rho);
  const double floor = 1e-14 * std::max(eig.values.maxCoeff(), 0.0);
  Eigen::Vector4d root;
  for (int q = 0; q < 4; ++q) root(q) = eig.values(q) > floor ? std::sqrt(eig.values(q)) : 0.0;
  const Eigen::Matrix4cd sqrt_rho = eig.vectors * root.asDiagonal() * eig.vectors.adjoint();
  const Eigen::Matrix4cd a = sqrt_rho * yy * sqrt_rho.conjugate();
  const Eigen::Vector4d sv = Eigen::JacobiSVD<Eigen::Matrix4cd>(a).singularValues();

  double lam[4] = {sv(0), sv(1), sv(2), sv(3)};
  std::sort(lam, lam + 4, std::greater<>());
  return std::clamp(lam[0] - lam[1] - lam[2] - lam[3], 0.0, 1.0);
}

double pure_concurrence(Complex a, Complex b) { return 2.0 * std::abs(a) * std::abs(b); }

}  // namespace spinphase
