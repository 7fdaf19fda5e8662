#include "spinphase/berry_loop.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "spinphase/error.hpp"
#include "spinphase/free_fermion.hpp"
#include "spinphase/parallel.hpp"
#include "spinphase/simd/kernels.hpp"

namespace spinphase {
namespace {

constexpr double kPi = std::numbers::pi;

}  // namespace

StateLoop::StateLoop(std::vector<std::vector<Complex>> states) : states_(std::move(states)) {
  if (static_cast<int>(states_.size()) - 1 < kMinLoopSteps) {
    throw InvalidArgument("state loop needs at least " + std::to_string(kMinLoopSteps) +
                          " steps");
  }
  const std::size_t dim = states_.front().size();
  for (const auto& s : states_) {
    if (s.size() != dim) throw InvalidArgument("state loop entries differ in dimension");
    const double nrm = std::sqrt(simd::active_kernels().norm_sq(s.data(), s.size()));
    if (std::abs(nrm - 1.0) > 1e-10) {
      throw InvalidArgument("state loop entry not normalized: norm " + std::to_string(nrm));
    }
  }
}

StateLoop StateLoop::sample(const std::function<std::vector<Complex>(double)>& state_at,
                            double begin, double end, int steps) {
  if (steps < kMinLoopSteps) throw InvalidArgument("state loop needs more steps");
  std::vector<std::vector<Complex>> states;
  states.reserve(static_cast<std::size_t>(steps) + 1);
  for (int j = 0; j <= steps; ++j) {
    states.push_back(state_at(begin + (end - begin) * j / steps));
  }
  return StateLoop(std::move(states));
}

StateLoop StateLoop::reversed() const {
  return StateLoop(std::vector<std::vector<Complex>>(states_.rbegin(), states_.rend()));
}

double wilson_loop_phase(const StateLoop& loop) {
  const auto& states = loop.states();
  const auto& k = simd::active_kernels();
  const std::size_t count = states.size();
  double total = 0.0;
  for (std::size_t j = 0; j < count; ++j) {
    const auto& a = states[j];
    const auto& b = states[(j + 1) % count];
    const Complex overlap = k.dotc(a.data(), b.data(), a.size());
    if (std::abs(overlap) < kMinLoopOverlap) {
      throw NumericalFailure("state loop under-resolved at segment " + std::to_string(j) +
                             ": |overlap| = " + std::to_string(std::abs(overlap)));
    }
    total -= std::arg(overlap);
  }
  return total;
}

double mode_loop_phase(double lambda, double phi_k, int steps) {
  const auto loop = StateLoop::sample(
      [&](double phi) {
        const auto amp = analytic_mode_state(lambda, phi_k, phi);
        return std::vector<Complex>{amp[0], amp[1]};
      },
      0.0, kPi, steps);
  // The mode states carry e^{+2 i phi}, so -i int <g|d g> = +sum Arg.
  return -wilson_loop_phase(loop);
}

double wrap_to_pi(double x) {
  double r = std::remainder(x, 2.0 * kPi);  // [-pi, pi]
  if (r <= -kPi) r += 2.0 * kPi;
  return r;
}

PhaseReport ed_berry_phase(const ChainSpec& spec, int steps, const EdLoopOptions& options) {
  spec.validate();
  if (spec.model != Model::TransverseXY) {
    throw InvalidArgument("ED Berry loop is defined for the TransverseXY family");
  }
  if (spec.n_sites > 16) throw InvalidArgument("ED Berry loop limited to 16 sites");
  if (steps < kMinLoopSteps) {
    throw InvalidArgument("ED Berry loop needs at least " + std::to_string(kMinLoopSteps) +
                          " steps");
  }

  // H_phi is unitarily equivalent to H, so one gap check covers the loop.
  const HamiltonianOperator h0(spec);
  const auto g0 = ground_state(h0.as_operator(), h0.dim(), options.lanczos);
  const auto e1 = first_excited_state(h0.as_operator(), h0.dim(), g0.vector, options.lanczos);
  const double gap = e1.energy - g0.energy;
  if (gap < options.gap_threshold) {
    throw NumericalFailure("degenerate loop: ground-state gap " + std::to_string(gap) +
                           " at lambda = " + std::to_string(spec.lambda) + ", phi = 0");
  }

  auto solved = parallel_map(static_cast<std::size_t>(steps) + 1, options.jobs,
                             [&](std::size_t j) {
                               ChainSpec at = spec;
                               at.phi = std::min(kPi, kPi * static_cast<double>(j) / steps);
                               const RotatedHamiltonianOperator h(at);
                               try {
                                 return ground_state(h.as_operator(), h.dim(), options.lanczos)
                                     .vector;
                               } catch (const NumericalFailure& e) {
                                 throw NumericalFailure(std::string(e.what()) +
                                                            " at phi = " + std::to_string(at.phi),
                                                        e.best_residual());
                               }
                             });

  // Align each vector's phase to its predecessor; gauge-invariant, conditioning only.
  const auto& k = simd::active_kernels();
  for (std::size_t j = 1; j < solved.size(); ++j) {
    const Complex overlap = k.dotc(solved[j - 1].data(), solved[j].data(), solved[j].size());
    if (std::abs(overlap) > 0.0) {
      k.scale(std::conj(overlap) / std::abs(overlap), solved[j].data(), solved[j].size());
    }
  }

  const double raw = wilson_loop_phase(StateLoop(std::move(solved)));
  PhaseReport r = PhaseReport::make(wrap_to_pi(raw), PhaseMethod::WilsonLoop);
  r.metadata["raw_gamma"] = raw;
  r.metadata["gap"] = gap;
  r.metadata["steps"] = steps;
  r.metadata["n_sites"] = spec.n_sites;
  r.metadata["lambda"] = spec.lambda;
  r.metadata["gamma_anisotropy"] = spec.gamma;
  if (spec.n_sites % 2 == 1 && spec.n_sites >= 3 && spec.gamma == 1.0) {
    const double modesum = berry_phase_mode_sum(spec.n_sites, spec.lambda).gamma;
    const double offset = std::round((r.gamma - modesum) / kPi) + 0.0;  // no -0
    r.metadata["gamma_modesum"] = modesum;
    r.metadata["offset_multiple_of_pi"] = offset;
    r.metadata["abs_diff"] = std::abs(r.gamma - modesum - offset * kPi);
  }
  return r;
}

}  // namespace spinphase
