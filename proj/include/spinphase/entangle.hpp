#pragma once

#include <Eigen/Dense>

#include "spinphase/state.hpp"

namespace spinphase {

// Two-site reduced density matrix in the basis |uu>, |ud>, |du>, |dd>,
// index (b_i << 1) | b_j with b = 0 for spin up.
struct DensityMatrix4 {
  Eigen::Matrix4cd rho = Eigen::Matrix4cd::Zero();
  int site_i = 0;
  int site_j = 1;
};

// Hermitian, unit trace, eigenvalues >= -1e-10. Throws InvalidArgument with
// the offending quantity otherwise.
void check_density_matrix(const Eigen::Matrix4cd& rho, double tol = 1e-10);

DensityMatrix4 reduced_density_matrix(const StateVector& state, int i, int j);

// Wootters spin-flip concurrence, clipped to [0, 1].
double wootters_concurrence(const DensityMatrix4& rho);
double wootters_concurrence(const Eigen::Matrix4cd& rho);

// 2|a||b| for a|ud> - b|du>, no normalization applied.
double pure_concurrence(Complex a, Complex b);

}  // namespace spinphase
