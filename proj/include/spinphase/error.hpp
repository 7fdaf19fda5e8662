#pragma once

#include <stdexcept>
#include <string>

namespace spinphase {

// Bad arguments, out-of-range parameters, inconsistent specs.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A numerical procedure did not reach its stated accuracy.
class NumericalFailure : public std::runtime_error {
 public:
  NumericalFailure(const std::string& what, double best_residual = 0.0)
      : std::runtime_error(what), best_residual_(best_residual) {}

  double best_residual() const noexcept { return best_residual_; }

 private:
  double best_residual_;
};

}  // namespace spinphase
