#pragma once

#include <cstddef>
#include <functional>

namespace spinphase {

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  std::size_t intervals = 0;
};

inline constexpr std::size_t kDefaultMaxIntervals = 1'000'000;

// Adaptive Simpson on [a, b] with interval bisection and the Lyness
// acceptance test |S_left + S_right - S_whole| <= 15 tol_local, plus the
// Richardson correction. The tolerance is split in proportion to interval
// width. Throws NumericalFailure if max_intervals is exceeded.
QuadratureResult adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                                  double tol, std::size_t max_intervals = kDefaultMaxIntervals);

}  // namespace spinphase
