#include "spinphase/phase_report.hpp"

#include <cmath>
#include <numbers>

namespace spinphase {

std::string_view to_string(PhaseMethod method) {
  switch (method) {
    case PhaseMethod::ModeSum: return "mode_sum";
    case PhaseMethod::Quadrature: return "quadrature";
    case PhaseMethod::WilsonLoop: return "wilson_loop";
    case PhaseMethod::Adiabatic: return "adiabatic";
  }
  return "unknown";
}

ConcurrenceValue concurrence_from_phase(double gamma) {
  const double c = std::abs(gamma) / (2.0 * std::numbers::pi);
  return {c, c > 1.0};
}

PhaseReport PhaseReport::make(double gamma, PhaseMethod method) {
  const auto c = concurrence_from_phase(gamma);
  PhaseReport r;
  r.gamma = gamma;
  r.method = method;
  r.concurrence = c.value;
  r.out_of_range = c.out_of_range;
  return r;
}

}  // namespace spinphase
