#include <cmath>
#include <numbers>
#include <string>

#include "spinphase/afm.hpp"
#include "spinphase/berry_loop.hpp"
#include "spinphase/cli/reports.hpp"
#include "spinphase/eigensolve.hpp"
#include "spinphase/entangle.hpp"
#include "spinphase/error.hpp"
#include "spinphase/free_fermion.hpp"
#include "spinphase/parallel.hpp"
#include "spinphase/toy_two_spin.hpp"

namespace spinphase::cli {
namespace {

constexpr double kPi = std::numbers::pi;

double grid_point(double lo, double hi, int count, int k) {
  if (count == 1) return lo;
  if (k == count - 1) return hi;
  return lo + (hi - lo) * k / (count - 1);
}

LanczosOptions lanczos_options(const CommonConfig& c) {
  LanczosOptions o;
  o.tol = c.tol;
  o.seed = c.seed;
  return o;
}

// Re-raises numerical failures with the sweep point attached.
template <typename Fn>
auto with_context(const std::string& where, Fn&& fn) {
  try {
    return fn();
  } catch (const NumericalFailure& e) {
    throw NumericalFailure(std::string(e.what()) + " (" + where + ")", e.best_residual());
  }
}

std::string lambda_context(double lambda) { return "lambda = " + std::to_string(lambda); }

}  // namespace

Table run_toy(const ToyConfig& c) {
  validate(c);
  Table t;
  t.columns = {"theta", "gamma_plus", "gamma_minus", "mu_plus_abs", "concurrence_analytic",
               "concurrence_from_phase"};
  if (c.adiabatic) {
    t.columns.push_back("gamma_plus_numeric");
    t.columns.push_back("leakage");
  }
  t.columns.push_back("concurrence_out_of_range");

  auto rows = parallel_map(
      static_cast<std::size_t>(c.theta_steps), c.common.jobs, [&](std::size_t k) {
        const double theta = grid_point(0.0, kPi, c.theta_steps, static_cast<int>(k));
        const auto berry = toy::analytic_berry_phases(theta);
        const auto mu = toy::mu_factors(theta);
        const double c_analytic = toy::concurrence_theta(theta);
        const auto c_phase = concurrence_from_phase(berry.gamma_plus);
        std::vector<Cell> row{theta,
                              berry.gamma_plus,
                              berry.gamma_minus,
                              std::abs(mu.mu_plus),
                              c_analytic,
                              c_phase.value};
        if (c.adiabatic) {
          toy::ToyParams p;
          p.theta = theta;
          p.field_scale = c.field_scale;
          p.omega0 = c.ratio * c.field_scale;
          p.steps = c.time_steps;
          const auto num = toy::adiabatic_geometric_phase(p);
          row.emplace_back(num.gamma_plus);
          row.emplace_back(std::max(num.leakage_plus, num.leakage_minus));
        }
        row.emplace_back(c_analytic > 1.0 || c_phase.out_of_range);
        return row;
      });
  t.rows = std::move(rows);
  return t;
}

Table run_ising(const IsingConfig& c) {
  validate(c);
  Table t;
  t.columns = {"lambda", "gamma_thermo", "gamma_modesum_mean", "concurrence_phase"};
  if (c.ed) {
    t.columns.push_back("concurrence_wootters_ed");
    t.columns.push_back("ed_gap");
  }
  t.columns.push_back("concurrence_out_of_range");

  const LanczosOptions lanczos = lanczos_options(c.common);
  auto rows = parallel_map(
      static_cast<std::size_t>(c.lambda_steps), c.common.jobs, [&](std::size_t k) {
        const double lambda =
            grid_point(c.lambda_min, c.lambda_max, c.lambda_steps, static_cast<int>(k));
        return with_context(lambda_context(lambda), [&] {
          const auto thermo = berry_phase_thermo(lambda, c.common.tol);
          const auto modes = berry_phase_mode_sum(c.modes_n, lambda);
          const auto c_phase = concurrence_from_phase(thermo.gamma);
          std::vector<Cell> row{lambda, thermo.gamma, modes.metadata.at("per_mode_mean"),
                                c_phase.value};
          bool out_of_range = c_phase.out_of_range;
          if (c.ed) {
            const auto spec = ChainSpec::transverse_xy(c.n, c.gamma, lambda);
            const HamiltonianOperator h(spec);
            const auto g0 = ground_state(h.as_operator(), h.dim(), lanczos);
            const auto e1 = first_excited_state(h.as_operator(), h.dim(), g0.vector, lanczos);
            const double cw =
                wootters_concurrence(reduced_density_matrix(StateVector(c.n, g0.vector), 0, 1));
            out_of_range = out_of_range || cw > 1.0;
            row.emplace_back(cw);
            row.emplace_back(e1.energy - g0.energy);
          }
          row.emplace_back(out_of_range);
          return row;
        });
      });
  t.rows = std::move(rows);
  return t;
}

Table run_afm(const AfmConfig& c) {
  validate(c);
  Table t;
  t.columns = {"source", "n", "e_g", "gamma_af", "concurrence", "wootters_nn",
               "concurrence_out_of_range"};
  auto row_of = [](const afm::AfmReport& r) {
    return std::vector<Cell>{std::string(afm::to_string(r.source)),
                             static_cast<std::int64_t>(r.n_sites),
                             r.e_g,
                             r.gamma_af,
                             r.concurrence,
                             r.wootters_nn,
                             r.concurrence > 1.0 || r.wootters_nn > 1.0};
  };
  t.rows.push_back(row_of(afm::exact_afm_report()));

  const LanczosOptions lanczos = lanczos_options(c.common);
  auto ed_rows = parallel_map(c.n_list.size(), c.common.jobs, [&](std::size_t k) {
    const int n = c.n_list[k];
    return with_context("n = " + std::to_string(n),
                        [&] { return row_of(afm::ed_afm_report(n, lanczos)); });
  });
  for (auto& r : ed_rows) t.rows.push_back(std::move(r));
  return t;
}

Table run_berry_loop(const BerryLoopConfig& c) {
  validate(c);
  Table t;
  t.columns = {"n",        "lambda",        "steps", "gamma_wilson", "gamma_modesum",
               "abs_diff", "offset_multiple_of_pi"};
  EdLoopOptions options;
  options.lanczos = lanczos_options(c.common);
  options.jobs = c.common.jobs;
  for (double lambda : c.lambdas) {
    const auto r = with_context(lambda_context(lambda), [&] {
      return ed_berry_phase(ChainSpec::transverse_xy(c.n, 1.0, lambda), c.steps, options);
    });
    t.rows.push_back({static_cast<std::int64_t>(c.n), lambda,
                      static_cast<std::int64_t>(c.steps), r.gamma,
                      r.metadata.at("gamma_modesum"), r.metadata.at("abs_diff"),
                      static_cast<std::int64_t>(r.metadata.at("offset_multiple_of_pi"))});
  }
  return t;
}

}  // namespace spinphase::cli
