#pragma once
// Spin-1/2 chain Hamiltonians as matrix-free operators on the 2^N basis.
//
//   TransverseXY : H = -sum_i [ lambda((1+g)/2 sx_i sx_{i+1} + (1-g)/2 sy_i sy_{i+1}) + sz_i ]
//   HeisenbergAFM: H = +sum_<ij> [ (S+_i S-_j + S-_i S+_j)/2 + Sz_i Sz_j ],  S = sigma/2
//
// lambda scales only the couplings; the field term has unit weight. The
// rotated family is H_phi = g_phi H g_phi^dagger with g_phi = prod_i exp(i phi sz_i / 2).

#include <cstdint>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "spinphase/state.hpp"

namespace spinphase {

enum class Model { TransverseXY, HeisenbergAFM };
enum class Boundary { Open, Periodic };

struct ChainSpec {
  Model model = Model::TransverseXY;
  int n_sites = 2;
  Boundary boundary = Boundary::Periodic;
  double gamma = 1.0;   // anisotropy, TransverseXY only
  double lambda = 0.0;  // inverse field strength, TransverseXY only
  double phi = 0.0;     // rotation angle of the H_phi family

  // Both factories validate before returning.
  static ChainSpec transverse_xy(int n_sites, double gamma, double lambda,
                                 Boundary boundary = Boundary::Periodic, double phi = 0.0);
  static ChainSpec heisenberg(int n_sites, Boundary boundary = Boundary::Periodic);

  // Throws InvalidArgument on any violated invariant.
  void validate() const;

  // Nearest-neighbour bonds (i, j) in application order.
  std::vector<std::pair<int, int>> bonds() const;
};

// In-place action y = A x for a dim-sized vector.
using LinearOperator = std::function<void(std::span<const Complex>, std::span<Complex>)>;

// Precomputed diagonal plus a list of two-site flip terms. Apply is
// allocation-free and safe to call concurrently.
class HamiltonianOperator {
 public:
  explicit HamiltonianOperator(const ChainSpec& spec);

  const ChainSpec& spec() const noexcept { return spec_; }
  std::size_t dim() const noexcept { return diagonal_.size(); }

  void apply(std::span<const Complex> in, std::span<Complex> out) const;
  LinearOperator as_operator() const;

 private:
  struct FlipTerm {
    std::uint64_t mask;
    unsigned bit_a;
    unsigned bit_b;
    double c_equal;
    double c_differ;
  };

  ChainSpec spec_;
  std::vector<double> diagonal_;
  std::vector<FlipTerm> flips_;
};

// g_phi as a diagonal: exp(i phi (n_up - n_down) / 2) per basis index.
class RotationOperator {
 public:
  RotationOperator(int n_sites, double phi);

  void apply_inplace(std::span<Complex> x) const;

 private:
  std::vector<Complex> phases_;
};

// H_phi = g_phi H g_phi^dagger, evaluated as rotate(-phi) -> H -> rotate(+phi).
class RotatedHamiltonianOperator {
 public:
  explicit RotatedHamiltonianOperator(const ChainSpec& spec);

  std::size_t dim() const noexcept { return base_.dim(); }
  void apply(std::span<const Complex> in, std::span<Complex> out) const;
  LinearOperator as_operator() const;

 private:
  HamiltonianOperator base_;
  RotationOperator forward_;
  RotationOperator backward_;
};

StateVector apply_hamiltonian(const ChainSpec& spec, const StateVector& in);
StateVector apply_rotation(const StateVector& in, double phi);
StateVector rotated_hamiltonian_apply(const ChainSpec& spec, const StateVector& in);

// Dense H assembled from explicit 4x4 two-site blocks and 2x2 site terms via
// Kronecker products. Independent of the matrix-free path; N <= 12. The
// rotation angle is ignored, as in apply_hamiltonian.
Eigen::MatrixXcd dense_hamiltonian(const ChainSpec& spec);

}  // namespace spinphase
