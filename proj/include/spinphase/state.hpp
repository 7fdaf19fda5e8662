#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace spinphase {

using Complex = std::complex<double>;

inline constexpr int kMaxSites = 20;

// Amplitudes over the 2^N computational basis of an N-site spin-1/2 chain.
// Bit i of a basis index is site i; a 0 bit is spin up (sigma^z = +1).
class StateVector {
 public:
  StateVector() = default;
  explicit StateVector(int n_sites);
  StateVector(int n_sites, std::vector<Complex> amplitudes);

  static StateVector basis(int n_sites, std::uint64_t index);

  int n_sites() const noexcept { return n_sites_; }
  std::size_t dim() const noexcept { return amplitudes_.size(); }

  std::span<Complex> amplitudes() noexcept { return amplitudes_; }
  std::span<const Complex> amplitudes() const noexcept { return amplitudes_; }
  const std::vector<Complex>& data() const noexcept { return amplitudes_; }

  Complex& operator[](std::size_t k) { return amplitudes_[k]; }
  const Complex& operator[](std::size_t k) const { return amplitudes_[k]; }

  double norm() const;
  // Scales to unit norm; throws NumericalFailure on a zero vector.
  StateVector& normalize();

 private:
  int n_sites_ = 0;
  std::vector<Complex> amplitudes_;
};

// <x|y>
Complex inner(std::span<const Complex> x, std::span<const Complex> y);
inline Complex inner(const StateVector& x, const StateVector& y) {
  return inner(x.amplitudes(), y.amplitudes());
}

std::size_t dim_for_sites(int n_sites);

}  // namespace spinphase
