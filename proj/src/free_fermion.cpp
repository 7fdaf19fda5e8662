#include "spinphase/free_fermion.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "spinphase/error.hpp"
#include "spinphase/quadrature.hpp"

namespace spinphase {
namespace {

constexpr double kPi = std::numbers::pi;

void check_angle_args(double lambda, double phi) {
  if (!(lambda >= 0.0) || !std::isfinite(lambda)) {
    throw InvalidArgument("lambda must be finite and nonnegative");
  }
  if (!(phi >= 0.0 && phi <= kPi)) throw InvalidArgument("phi must lie in [0, pi]");
}

// 1 + lambda cos(phi) and 1 + lambda^2 + 2 lambda cos(phi), written through
// cos^2(phi/2) so that the cancellation near lambda = 1, phi = pi is exact.
struct AngleParts {
  double num;
  double den_sq;
};

AngleParts angle_parts(double lambda, double phi) {
  const double c = std::cos(0.5 * phi);
  const double c2 = c * c;
  return {1.0 - lambda + 2.0 * lambda * c2,
          (1.0 - lambda) * (1.0 - lambda) + 4.0 * lambda * c2};
}

double one_minus_cos_theta(double lambda, double phi) {
  const auto [num, den_sq] = angle_parts(lambda, phi);
  if (den_sq <= 0.0) return 1.0;  // continuity: cos theta -> 0
  return 1.0 - num / std::sqrt(den_sq);
}

}  // namespace

double bogoliubov_angle(double lambda, double phi) {
  check_angle_args(lambda, phi);
  const auto [num, den_sq] = angle_parts(lambda, phi);
  if (den_sq <= 0.0) return 0.5 * kPi;
  // sin theta = lambda sin(phi) / den, cos theta = num / den.
  return std::atan2(lambda * std::sin(phi), num);
}

ModeAngles mode_angles(int n_sites, double lambda) {
  if (n_sites < 3 || n_sites % 2 == 0) {
    throw InvalidArgument("mode sum needs odd n_sites >= 3, got " + std::to_string(n_sites));
  }
  ModeAngles m;
  m.n_sites = n_sites;
  m.lambda = lambda;
  const int modes = (n_sites - 1) / 2;
  m.thetas.reserve(static_cast<std::size_t>(modes));
  m.phis.reserve(static_cast<std::size_t>(modes));
  for (int k = 1; k <= modes; ++k) {
    const double phi_k = 2.0 * kPi * k / n_sites;
    m.phis.push_back(phi_k);
    m.thetas.push_back(bogoliubov_angle(lambda, phi_k));
  }
  return m;
}

PhaseReport berry_phase_mode_sum(int n_sites, double lambda) {
  const ModeAngles m = mode_angles(n_sites, lambda);
  double gamma = 0.0;
  for (double phi_k : m.phis) gamma += kPi * one_minus_cos_theta(lambda, phi_k);
  const auto modes = static_cast<double>(m.thetas.size());

  PhaseReport r = PhaseReport::make(gamma, PhaseMethod::ModeSum);
  r.metadata["per_mode_mean"] = gamma / modes;
  r.metadata["modes"] = modes;
  r.metadata["n_sites"] = n_sites;
  r.metadata["lambda"] = lambda;
  return r;
}

PhaseReport berry_phase_thermo(double lambda, double tol) {
  check_angle_args(lambda, 0.0);
  if (!(tol > 0.0)) throw InvalidArgument("quadrature tolerance must be positive");
  const auto q = adaptive_simpson(
      [lambda](double phi) { return one_minus_cos_theta(lambda, phi); }, 0.0, kPi, tol);
  PhaseReport r = PhaseReport::make(q.value, PhaseMethod::Quadrature);
  r.metadata["lambda"] = lambda;
  r.metadata["tol"] = tol;
  r.metadata["error_estimate"] = q.error_estimate;
  r.metadata["intervals"] = static_cast<double>(q.intervals);
  return r;
}

std::array<Complex, 2> analytic_mode_state(double lambda, double phi_k, double phi) {
  const double theta = bogoliubov_angle(lambda, phi_k);
  return {Complex(std::cos(0.5 * theta), 0.0),
          Complex(0.0, -1.0) * std::polar(1.0, 2.0 * phi) * std::sin(0.5 * theta)};
}

}  // namespace spinphase
