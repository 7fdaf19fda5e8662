#include "spinphase/state.hpp"

#include <cmath>
#include <string>

#include "spinphase/error.hpp"
#include "spinphase/simd/kernels.hpp"

namespace spinphase {

std::size_t dim_for_sites(int n_sites) {
  if (n_sites < 1 || n_sites > kMaxSites) {
    throw InvalidArgument("n_sites must be in [1, " + std::to_string(kMaxSites) +
                          "], got " + std::to_string(n_sites));
  }
  return std::size_t{1} << n_sites;
}

StateVector::StateVector(int n_sites)
    : n_sites_(n_sites), amplitudes_(dim_for_sites(n_sites)) {}

StateVector::StateVector(int n_sites, std::vector<Complex> amplitudes)
    : n_sites_(n_sites), amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.size() != dim_for_sites(n_sites)) {
    throw InvalidArgument("amplitude count " + std::to_string(amplitudes_.size()) +
                          " does not match 2^" + std::to_string(n_sites));
  }
}

StateVector StateVector::basis(int n_sites, std::uint64_t index) {
  StateVector s(n_sites);
  if (index >= s.dim()) throw InvalidArgument("basis index out of range");
  s.amplitudes_[index] = 1.0;
  return s;
}

double StateVector::norm() const {
  return std::sqrt(simd::active_kernels().norm_sq(amplitudes_.data(), amplitudes_.size()));
}

StateVector& StateVector::normalize() {
  const double nrm = norm();
  if (!(nrm > 0.0)) throw NumericalFailure("cannot normalize a zero state");
  simd::active_kernels().scale(Complex(1.0 / nrm, 0.0), amplitudes_.data(), amplitudes_.size());
  return *this;
}

Complex inner(std::span<const Complex> x, std::span<const Complex> y) {
  if (x.size() != y.size()) throw InvalidArgument("inner product of mismatched dimensions");
  return simd::active_kernels().dotc(x.data(), y.data(), x.size());
}

}  // namespace spinphase
