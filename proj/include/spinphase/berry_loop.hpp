#pragma once
// Discrete, gauge-invariant Berry phases from closed loops of states.

#include <functional>
#include <vector>

#include "spinphase/eigensolve.hpp"
#include "spinphase/phase_report.hpp"
#include "spinphase/spin_model.hpp"
#include "spinphase/state.hpp"

namespace spinphase {

inline constexpr int kMinLoopSteps = 8;
inline constexpr double kMinLoopOverlap = 0.1;

// states[j] sampled at parameter j / steps along the path, j = 0..steps. The
// last segment closes states[steps] back onto states[0].
class StateLoop {
 public:
  explicit StateLoop(std::vector<std::vector<Complex>> states);

  static StateLoop sample(const std::function<std::vector<Complex>(double)>& state_at,
                          double begin, double end, int steps);

  int steps() const noexcept { return static_cast<int>(states_.size()) - 1; }
  const std::vector<std::vector<Complex>>& states() const noexcept { return states_; }

  StateLoop reversed() const;

 private:
  std::vector<std::vector<Complex>> states_;
};

// -sum_j Arg<psi_j|psi_{j+1}>, closing segment included, each Arg in (-pi, pi].
// For a spin-1/2 cone |n(theta, phi)> traversed once this is -pi(1 - cos theta).
// Throws NumericalFailure when a segment overlap drops below kMinLoopOverlap.
double wilson_loop_phase(const StateLoop& loop);

// Berry phase of one Bogoliubov mode along phi in [0, pi], in the
// Gamma = -i int <g| d_phi g> convention of the mode sum: pi (1 - cos theta_k).
double mode_loop_phase(double lambda, double phi_k, int steps);

struct EdLoopOptions {
  LanczosOptions lanczos{};
  int jobs = 1;
  double gap_threshold = 1e-8;
};

// Ground states of H_phi on phi_j = j pi / steps, phase-aligned to their
// predecessor, then the Wilson loop. gamma is the loop phase reduced to
// (-pi, pi] (the closure g_pi only fixes it mod 2 pi); metadata carries
// "raw_gamma", "gap", "steps", "n_sites", "lambda" and, for odd N on the Ising line,
// "gamma_modesum", "offset_multiple_of_pi", "abs_diff".
PhaseReport ed_berry_phase(const ChainSpec& spec, int steps, const EdLoopOptions& options = {});

// x reduced into (-pi, pi].
double wrap_to_pi(double x);

}  // namespace spinphase
