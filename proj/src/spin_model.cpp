#include "spinphase/spin_model.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <string>

#include "spinphase/error.hpp"
#include "spinphase/simd/kernels.hpp"

namespace spinphase {

ChainSpec ChainSpec::transverse_xy(int n_sites, double gamma, double lambda, Boundary boundary,
                                   double phi) {
  ChainSpec s;
  s.model = Model::TransverseXY;
  s.n_sites = n_sites;
  s.boundary = boundary;
  s.gamma = gamma;
  s.lambda = lambda;
  s.phi = phi;
  s.validate();
  return s;
}

ChainSpec ChainSpec::heisenberg(int n_sites, Boundary boundary) {
  ChainSpec s;
  s.model = Model::HeisenbergAFM;
  s.n_sites = n_sites;
  s.boundary = boundary;
  s.validate();
  return s;
}

void ChainSpec::validate() const {
  if (n_sites < 1 || n_sites > kMaxSites) {
    throw InvalidArgument("n_sites must be in [1, " + std::to_string(kMaxSites) + "]");
  }
  if (boundary == Boundary::Periodic && n_sites == 2) {
    throw InvalidArgument("periodic boundary with 2 sites double-counts the bond");
  }
  if (!(gamma >= 0.0 && gamma <= 1.0)) throw InvalidArgument("gamma must lie in [0, 1]");
  if (!(lambda >= 0.0) || !std::isfinite(lambda)) {
    throw InvalidArgument("lambda must be finite and nonnegative");
  }
  if (!(phi >= 0.0 && phi <= std::numbers::pi)) throw InvalidArgument("phi must lie in [0, pi]");
}

std::vector<std::pair<int, int>> ChainSpec::bonds() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i + 1 < n_sites; ++i) out.emplace_back(i, i + 1);
  if (boundary == Boundary::Periodic && n_sites > 2) out.emplace_back(n_sites - 1, 0);
  return out;
}

HamiltonianOperator::HamiltonianOperator(const ChainSpec& spec) : spec_(spec) {
  spec_.validate();
  const std::size_t dim = dim_for_sites(spec_.n_sites);
  const auto bonds = spec_.bonds();
  diagonal_.assign(dim, 0.0);

  if (spec_.model == Model::TransverseXY) {
    const int n = spec_.n_sites;
    for (std::size_t s = 0; s < dim; ++s) {
      const int down = std::popcount(static_cast<std::uint64_t>(s));
      diagonal_[s] = -static_cast<double>(n - 2 * down);
    }
    if (spec_.lambda != 0.0) {
      // (1+g)/2 sx sx + (1-g)/2 sy sy flips both bits with weight g when they
      // agree and 1 when they differ.
      for (auto [i, j] : bonds) {
        flips_.push_back({(std::uint64_t{1} << i) | (std::uint64_t{1} << j),
                          static_cast<unsigned>(i), static_cast<unsigned>(j),
                          -spec_.lambda * spec_.gamma, -spec_.lambda});
      }
    }
  } else {
    for (std::size_t s = 0; s < dim; ++s) {
      double e = 0.0;
      for (auto [i, j] : bonds) e += (((s >> i) & 1U) == ((s >> j) & 1U)) ? 0.25 : -0.25;
      diagonal_[s] = e;
    }
    for (auto [i, j] : bonds) {
      flips_.push_back({(std::uint64_t{1} << i) | (std::uint64_t{1} << j),
                        static_cast<unsigned>(i), static_cast<unsigned>(j), 0.0, 0.5});
    }
  }
}

void HamiltonianOperator::apply(std::span<const Complex> in, std::span<Complex> out) const {
  const std::size_t n = diagonal_.size();
  if (in.size() != n || out.size() != n) {
    throw InvalidArgument("Hamiltonian applied to a vector of dimension " +
                          std::to_string(in.size()) + ", expected " + std::to_string(n));
  }
  const auto& k = simd::active_kernels();
  std::fill(out.begin(), out.end(), Complex{});
  k.diag_axpy(diagonal_.data(), in.data(), out.data(), n);
  for (const auto& f : flips_) {
    k.flip_axpy(in.data(), out.data(), n, f.mask, f.bit_a, f.bit_b, f.c_equal, f.c_differ);
  }
}

LinearOperator HamiltonianOperator::as_operator() const {
  return [this](std::span<const Complex> in, std::span<Complex> out) { apply(in, out); };
}

RotationOperator::RotationOperator(int n_sites, double phi) {
  const std::size_t dim = dim_for_sites(n_sites);
  phases_.resize(dim);
  for (std::size_t s = 0; s < dim; ++s) {
    const int down = std::popcount(static_cast<std::uint64_t>(s));
    const int up = n_sites - down;
    phases_[s] = std::polar(1.0, 0.5 * phi * static_cast<double>(up - down));
  }
}

void RotationOperator::apply_inplace(std::span<Complex> x) const {
  if (x.size() != phases_.size()) throw InvalidArgument("rotation dimension mismatch");
  simd::active_kernels().phase_mul(phases_.data(), x.data(), x.size());
}

namespace {

ChainSpec require_xy(const ChainSpec& spec) {
  if (spec.model != Model::TransverseXY) {
    throw InvalidArgument("rotated Hamiltonian family is defined for TransverseXY only");
  }
  return spec;
}

}  // namespace

RotatedHamiltonianOperator::RotatedHamiltonianOperator(const ChainSpec& spec)
    : base_(require_xy(spec)),
      forward_(spec.n_sites, spec.phi),
      backward_(spec.n_sites, -spec.phi) {}

void RotatedHamiltonianOperator::apply(std::span<const Complex> in,
                                       std::span<Complex> out) const {
  std::vector<Complex> tmp(in.begin(), in.end());
  backward_.apply_inplace(tmp);
  base_.apply(tmp, out);
  forward_.apply_inplace(out);
}

LinearOperator RotatedHamiltonianOperator::as_operator() const {
  return [this](std::span<const Complex> in, std::span<Complex> out) { apply(in, out); };
}

StateVector apply_hamiltonian(const ChainSpec& spec, const StateVector& in) {
  if (in.n_sites() != spec.n_sites) throw InvalidArgument("state/spec site count mismatch");
  HamiltonianOperator h(spec);
  StateVector out(spec.n_sites);
  h.apply(in.amplitudes(), out.amplitudes());
  return out;
}

StateVector apply_rotation(const StateVector& in, double phi) {
  StateVector out = in;
  RotationOperator(in.n_sites(), phi).apply_inplace(out.amplitudes());
  return out;
}

StateVector rotated_hamiltonian_apply(const ChainSpec& spec, const StateVector& in) {
  if (in.n_sites() != spec.n_sites) throw InvalidArgument("state/spec site count mismatch");
  RotatedHamiltonianOperator h(spec);
  StateVector out(spec.n_sites);
  h.apply(in.amplitudes(), out.amplitudes());
  return out;
}

namespace {

// Embeds a 4x4 block acting on sites (i, j), block index (b_i << 1) | b_j.
void add_two_site(Eigen::MatrixXcd& h, int n, int i, int j, const Eigen::Matrix4cd& block) {
  const std::size_t dim = std::size_t{1} << n;
  const std::uint64_t pair = (std::uint64_t{1} << i) | (std::uint64_t{1} << j);
  for (std::size_t s = 0; s < dim; ++s) {
    if ((s & pair) != 0) continue;
    for (int r = 0; r < 4; ++r) {
      for (int c = 0; c < 4; ++c) {
        const std::size_t row = s | (((r >> 1) & 1U) << i) | ((r & 1U) << j);
        const std::size_t col = s | (((c >> 1) & 1U) << i) | ((c & 1U) << j);
        h(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) += block(r, c);
      }
    }
  }
}

void add_one_site(Eigen::MatrixXcd& h, int n, int i, const Eigen::Matrix2cd& block) {
  const std::size_t dim = std::size_t{1} << n;
  const std::uint64_t bit = std::uint64_t{1} << i;
  for (std::size_t s = 0; s < dim; ++s) {
    if ((s & bit) != 0) continue;
    for (int r = 0; r < 2; ++r) {
      for (int c = 0; c < 2; ++c) {
        h(static_cast<Eigen::Index>(s | (r ? bit : 0)),
          static_cast<Eigen::Index>(s | (c ? bit : 0))) += block(r, c);
      }
    }
  }
}

Eigen::Matrix4cd kron(const Eigen::Matrix2cd& a, const Eigen::Matrix2cd& b) {
  Eigen::Matrix4cd out;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) out(r, c) = a(r >> 1, c >> 1) * b(r & 1, c & 1);
  return out;
}

}  // namespace

Eigen::MatrixXcd dense_hamiltonian(const ChainSpec& spec) {
  spec.validate();
  if (spec.n_sites > 12) throw InvalidArgument("dense Hamiltonian limited to 12 sites");
  const int n = spec.n_sites;
  const Eigen::Index dim = Eigen::Index{1} << n;
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(dim, dim);

  const Complex I(0.0, 1.0);
  Eigen::Matrix2cd sx, sy, sz;
  sx << 0, 1, 1, 0;
  sy << 0, -I, I, 0;
  sz << 1, 0, 0, -1;

  Eigen::Matrix4cd bond;
  if (spec.model == Model::TransverseXY) {
    bond = -spec.lambda * (0.5 * (1.0 + spec.gamma) * kron(sx, sx) +
                           0.5 * (1.0 - spec.gamma) * kron(sy, sy));
    for (int i = 0; i < n; ++i) add_one_site(h, n, i, -sz);
  } else {
    bond = 0.25 * (kron(sx, sx) + kron(sy, sy) + kron(sz, sz));
  }
  for (auto [i, j] : spec.bonds()) add_two_site(h, n, i, j, bond);

  return h;
}

}  // namespace spinphase
