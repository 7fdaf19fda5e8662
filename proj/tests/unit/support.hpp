#pragma once

#include <complex>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "spinphase/state.hpp"

namespace spinphase::testing {

inline std::vector<Complex> random_amplitudes(std::size_t dim, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  std::vector<Complex> v(dim);
  for (auto& z : v) z = {g(rng), g(rng)};
  return v;
}

inline StateVector random_state(int n, std::mt19937_64& rng) {
  StateVector s(n, random_amplitudes(dim_for_sites(n), rng));
  s.normalize();
  return s;
}

// Haar-ish single-qubit unitary from a QR of a Gaussian matrix.
inline Eigen::Matrix2cd random_unitary(std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  Eigen::Matrix2cd m;
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) m(r, c) = {g(rng), g(rng)};
  Eigen::HouseholderQR<Eigen::Matrix2cd> qr(m);
  return qr.householderQ();
}

inline double max_abs_diff(std::span<const Complex> a, std::span<const Complex> b) {
  double m = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) m = std::max(m, std::abs(a[k] - b[k]));
  return m;
}

}  // namespace spinphase::testing
