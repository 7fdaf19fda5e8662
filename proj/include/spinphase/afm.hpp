#pragma once
// Heisenberg antiferromagnetic chain: correlator / phase / concurrence
// relations, the thermodynamic-limit values, and finite-ring ED checks.
// e_g denotes the magnitude of the ground-state energy per site.

#include <map>
#include <string>
#include <string_view>

#include "spinphase/eigensolve.hpp"
#include "spinphase/state.hpp"

namespace spinphase::afm {

enum class Source { ExactBethe, ED };
enum class Component { zz, xx, yy, vector };

std::string_view to_string(Source source);

struct AfmReport {
  double e_g = 0.0;
  double gamma_af = 0.0;     // pi (1 - 4 e_g)
  double concurrence = 0.0;  // |gamma_af| / (2 pi)
  double wootters_nn = 0.0;  // nearest-neighbour two-site concurrence
  Source source = Source::ExactBethe;
  int n_sites = 0;           // 0 for the thermodynamic limit
  std::map<std::string, double> metadata;
};

// pi (1 - 4 |corr|); |corr| <= 3/4.
double correlation_to_phase(double corr);

// Thermodynamic-limit values from e_g = ln 2 - 1/4. wootters_nn comes from
// the SU(2)-invariant two-site state with <S_i.S_j> = 1/4 - ln 2.
AfmReport exact_afm_report();

// Periodic ring of even N in [4, 16]; N = 2 is treated as a single open bond.
// e_g is |E0| per bond, which is per site on a ring.
AfmReport ed_afm_report(int n_sites, const LanczosOptions& options = {});

// <S_i^a S_j^a> for a = z, x, y, or the full <S_i . S_j>.
double correlator(const StateVector& state, int i, int j, Component component);

// Concurrence of an SU(2)-invariant two-site state with correlator <S_i.S_j>:
// max(0, -1/2 - 2 <S_i.S_j>).
double isotropic_concurrence(double vector_correlator);

}  // namespace spinphase::afm
