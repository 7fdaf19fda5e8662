#pragma once

#include <map>
#include <string>
#include <string_view>

namespace spinphase {

enum class PhaseMethod { ModeSum, Quadrature, WilsonLoop, Adiabatic };

std::string_view to_string(PhaseMethod method);

struct ConcurrenceValue {
  double value = 0.0;
  bool out_of_range = false;  // value > 1; reported, never clipped
};

// |gamma| / (2 pi)
ConcurrenceValue concurrence_from_phase(double gamma);

struct PhaseReport {
  double gamma = 0.0;
  PhaseMethod method = PhaseMethod::ModeSum;
  double concurrence = 0.0;
  bool out_of_range = false;
  std::map<std::string, double> metadata;

  static PhaseReport make(double gamma, PhaseMethod method);
};

}  // namespace spinphase
