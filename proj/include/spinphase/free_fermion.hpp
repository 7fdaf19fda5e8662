#pragma once
// Jordan-Wigner / Bogoliubov solution of the periodic XY chain in the
// rotated family. Mode k carries phi_k = 2 pi k / N, k = 1..(N-1)/2, and
//
//   cos theta_k = (1 + lambda cos phi_k) / sqrt(1 + lambda^2 + 2 lambda cos phi_k).

#include <array>
#include <vector>

#include "spinphase/phase_report.hpp"
#include "spinphase/state.hpp"

namespace spinphase {

struct ModeAngles {
  int n_sites = 0;  // odd
  double lambda = 0.0;
  std::vector<double> thetas;  // theta_k in [0, pi], k = 1..M
  std::vector<double> phis;    // phi_k = 2 pi k / N
};

// theta in [0, pi]; returns pi/2 at the removable singularity lambda = 1, phi = pi.
double bogoliubov_angle(double lambda, double phi);

ModeAngles mode_angles(int n_sites, double lambda);

// Gamma = sum_k pi (1 - cos theta_k). metadata: "per_mode_mean" (Gamma / M),
// "modes", "n_sites", "lambda". Comparisons with the thermodynamic limit use
// the per-mode mean.
PhaseReport berry_phase_mode_sum(int n_sites, double lambda);

inline constexpr double kDefaultQuadratureTol = 1e-10;

// Gamma(lambda) = int_0^pi [1 - cos theta(phi)] dphi.
PhaseReport berry_phase_thermo(double lambda, double tol = kDefaultQuadratureTol);

// Amplitudes of (|0>_k|0>_-k, |1>_k|1>_-k) for mode k at rotation angle phi:
// (cos(theta_k/2), -i e^{2 i phi} sin(theta_k/2)).
std::array<Complex, 2> analytic_mode_state(double lambda, double phi_k, double phi);

}  // namespace spinphase
