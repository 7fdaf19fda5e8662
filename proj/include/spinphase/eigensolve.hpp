#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "spinphase/spin_model.hpp"
#include "spinphase/state.hpp"

namespace spinphase {

struct LanczosOptions {
  double tol = 1e-10;
  int max_krylov = 200;
  int max_restarts = 5;
  std::uint64_t seed = 0;
};

struct GroundStateResult {
  double energy = 0.0;
  std::vector<Complex> vector;  // unit norm
  int iterations = 0;           // operator applications
  double residual_norm = 0.0;   // ||H v - E v||
};

// Lowest eigenpair of a Hermitian operator by restarted Lanczos with full
// reorthogonalization. Deterministic for a fixed seed. Throws NumericalFailure
// (carrying the best residual) when max_restarts is exhausted.
GroundStateResult ground_state(const LinearOperator& apply, std::size_t dim,
                               const LanczosOptions& options = {});

// Lowest eigenvalue of H restricted to the orthogonal complement of `ground`.
// With a non-degenerate ground state this is the first excited level.
GroundStateResult first_excited_state(const LinearOperator& apply, std::size_t dim,
                                      const std::vector<Complex>& ground,
                                      const LanczosOptions& options = {});

inline GroundStateResult chain_ground_state(const ChainSpec& spec,
                                            const LanczosOptions& options = {}) {
  HamiltonianOperator h(spec);
  return ground_state(h.as_operator(), h.dim(), options);
}

struct DenseEigen {
  Eigen::VectorXd values;    // ascending
  Eigen::MatrixXcd vectors;  // columns, orthonormal
};

inline constexpr Eigen::Index kDenseEighMaxDim = 64;

// Small Hermitian eigenproblem. The input is symmetrized first; asymmetry
// above 1e-10 is rejected.
DenseEigen dense_eigh(const Eigen::MatrixXcd& matrix);

// Deterministic start vector: counter-based hash of (seed, index).
std::vector<Complex> seeded_random_vector(std::size_t dim, std::uint64_t seed);

}  // namespace spinphase
