#pragma once
// Two-spin model in a field B n(theta, t) rotating about z at omega0, hbar = 1.
//
// Instantaneous eigenstates of n.sigma (eigenvalues +1, -1):
//   |up_n>   = cos(theta/2)|u> + sin(theta/2) e^{i omega0 t}|d>
//   |down_n> = sin(theta/2)|u> - cos(theta/2) e^{i omega0 t}|d>
// Berry phases over one period: gamma_+ = -pi(1 - cos theta), gamma_- = -pi(1 + cos theta).

#include <array>

#include "spinphase/state.hpp"

namespace spinphase::toy {

using Spinor = std::array<Complex, 2>;

struct ToyParams {
  double theta = 0.0;        // tilt of the field axis from z, [0, pi]
  double omega0 = 0.01;      // drive angular velocity
  double field_scale = 1.0;  // k B, energy units
  int steps = 100'000;       // time steps per period
};

std::array<double, 3> n_vector(double theta, double t, double omega0);

struct EigenPair {
  Spinor up;    // eigenvalue +1 of n.sigma
  Spinor down;  // eigenvalue -1
};
EigenPair instantaneous_eigenstates(double theta, double t, double omega0);

// (n . sigma) psi
Spinor apply_n_sigma(const std::array<double, 3>& n, const Spinor& psi);

struct BerryPair {
  double gamma_plus;
  double gamma_minus;
};
BerryPair analytic_berry_phases(double theta);

struct MuFactors {
  double mu_plus;   // -(1 - cos theta)/2
  double mu_minus;  // -(1 + cos theta)/2
};
MuFactors mu_factors(double theta);

// sqrt(2) (cos^2(theta/4), sin^2(theta/4)). Not normalized except at theta = pi.
struct AmplitudeProfile {
  double a_abs;
  double b_abs;
};
AmplitudeProfile amplitude_profile(double theta);

// sin^2(theta / 2)
double concurrence_theta(double theta);

struct AdiabaticResult {
  // Geometric phases in (-2 pi, 0] after subtracting the dynamical phase and
  // the second-order adiabatic level shift.
  double gamma_plus = 0.0;
  double gamma_minus = 0.0;
  // Same, with only the +-field_scale/2 dynamical phase removed.
  double gamma_plus_uncorrected = 0.0;
  double gamma_minus_uncorrected = 0.0;
  double leakage_plus = 0.0;   // |<down_n(tau)|psi_+(tau)>|^2
  double leakage_minus = 0.0;  // |<up_n(tau)|psi_-(tau)>|^2
  double norm_drift = 0.0;     // max | ||psi(tau)|| - 1 |
  bool adiabaticity_failure = false;  // leakage > 10 (omega0/field_scale)^2
  bool ratio_warning = false;         // omega0/field_scale > 1
};

// Integrates i d psi/dt = (field_scale/2) n(theta, t).sigma psi over one
// period from each instantaneous eigenstate with the exact 2x2 propagator of
// the midpoint Hamiltonian.
AdiabaticResult adiabatic_geometric_phase(const ToyParams& params);

// x mapped into (-2 pi, 0]; values within 1e-9 of -2 pi snap to 0.
double window_geometric(double x);

}  // namespace spinphase::toy
