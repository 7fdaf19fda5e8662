#include "spinphase/toy_two_spin.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "spinphase/error.hpp"

namespace spinphase::toy {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr Complex kI{0.0, 1.0};

void check_theta(double theta) {
  if (!(theta >= 0.0 && theta <= kPi)) throw InvalidArgument("theta must lie in [0, pi]");
}

Complex dot(const Spinor& a, const Spinor& b) {
  return std::conj(a[0]) * b[0] + std::conj(a[1]) * b[1];
}

// exp(-i (dt field/2) n.sigma) psi = cos(x) psi - i sin(x) (n.sigma) psi
Spinor propagate(const std::array<double, 3>& n, double x, const Spinor& psi) {
  const Spinor ns = apply_n_sigma(n, psi);
  const double c = std::cos(x), s = std::sin(x);
  return {c * psi[0] - kI * s * ns[0], c * psi[1] - kI * s * ns[1]};
}

}  // namespace

std::array<double, 3> n_vector(double theta, double t, double omega0) {
  check_theta(theta);
  const double st = std::sin(theta);
  return {st * std::cos(omega0 * t), st * std::sin(omega0 * t), std::cos(theta)};
}

EigenPair instantaneous_eigenstates(double theta, double t, double omega0) {
  check_theta(theta);
  const double c = std::cos(0.5 * theta), s = std::sin(0.5 * theta);
  const Complex e = std::polar(1.0, omega0 * t);
  return {{Complex(c, 0.0), s * e}, {Complex(s, 0.0), -c * e}};
}

Spinor apply_n_sigma(const std::array<double, 3>& n, const Spinor& psi) {
  // n.sigma = [[nz, nx - i ny], [nx + i ny, -nz]]
  const Complex off(n[0], -n[1]);
  return {n[2] * psi[0] + off * psi[1], std::conj(off) * psi[0] - n[2] * psi[1]};
}

BerryPair analytic_berry_phases(double theta) {
  check_theta(theta);
  const double c = std::cos(theta);
  return {-kPi * (1.0 - c), -kPi * (1.0 + c)};
}

MuFactors mu_factors(double theta) {
  check_theta(theta);
  const double c = std::cos(theta);
  return {-0.5 * (1.0 - c), -0.5 * (1.0 + c)};
}

AmplitudeProfile amplitude_profile(double theta) {
  check_theta(theta);
  const double c = std::cos(0.25 * theta), s = std::sin(0.25 * theta);
  return {std::numbers::sqrt2 * c * c, std::numbers::sqrt2 * s * s};
}

double concurrence_theta(double theta) {
  check_theta(theta);
  const double s = std::sin(0.5 * theta);
  return s * s;
}

double window_geometric(double x) {
  double y = x - 2.0 * kPi * std::ceil(x / (2.0 * kPi));
  if (y <= -2.0 * kPi + 1e-9) y = 0.0;
  return y;
}

AdiabaticResult adiabatic_geometric_phase(const ToyParams& p) {
  check_theta(p.theta);
  if (!(p.omega0 > 0.0) || !(p.field_scale > 0.0)) {
    throw InvalidArgument("omega0 and field_scale must be positive");
  }
  if (p.steps < 100) throw InvalidArgument("adiabatic run needs at least 100 steps per period");

  const double ratio = p.omega0 / p.field_scale;
  const double tau = 2.0 * kPi / p.omega0;
  const double dt = tau / p.steps;
  const double half_angle = 0.5 * p.field_scale * dt;

  const EigenPair start = instantaneous_eigenstates(p.theta, 0.0, p.omega0);
  Spinor plus = start.up;
  Spinor minus = start.down;
  // Second-order adiabatic level shift, accumulated as int |<m|d_t n>|^2 dt.
  double coupling_integral = 0.0;

  for (int step = 0; step < p.steps; ++step) {
    const double t0 = step * dt;
    const auto n_mid = n_vector(p.theta, t0 + 0.5 * dt, p.omega0);
    plus = propagate(n_mid, half_angle, plus);
    minus = propagate(n_mid, half_angle, minus);

    const EigenPair e0 = instantaneous_eigenstates(p.theta, t0, p.omega0);
    const EigenPair e1 = instantaneous_eigenstates(p.theta, t0 + dt, p.omega0);
    const double coupling = std::abs(dot(e0.down, e1.up) - dot(e1.down, e0.up)) / (2.0 * dt);
    coupling_integral += coupling * coupling * dt;
  }

  const EigenPair end = instantaneous_eigenstates(p.theta, tau, p.omega0);
  AdiabaticResult r;
  r.ratio_warning = ratio > 1.0;
  r.leakage_plus = std::norm(dot(end.down, plus));
  r.leakage_minus = std::norm(dot(end.up, minus));
  r.norm_drift = std::max(std::abs(std::sqrt(std::norm(plus[0]) + std::norm(plus[1])) - 1.0),
                          std::abs(std::sqrt(std::norm(minus[0]) + std::norm(minus[1])) - 1.0));
  r.adiabaticity_failure = std::max(r.leakage_plus, r.leakage_minus) > 10.0 * ratio * ratio;

  // total = -E tau + gamma - shift tau, with E = +-field/2 and shift = +-coupling^2/field.
  const double energy = 0.5 * p.field_scale;
  const double shift_phase = coupling_integral / p.field_scale;
  const double total_plus = std::arg(dot(start.up, plus));
  const double total_minus = std::arg(dot(start.down, minus));
  r.gamma_plus_uncorrected = window_geometric(total_plus + energy * tau);
  r.gamma_minus_uncorrected = window_geometric(total_minus - energy * tau);
  r.gamma_plus = window_geometric(total_plus + energy * tau + shift_phase);
  r.gamma_minus = window_geometric(total_minus - energy * tau - shift_phase);
  return r;
}

}  // namespace spinphase::toy
