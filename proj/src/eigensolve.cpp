#include "spinphase/eigensolve.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "spinphase/error.hpp"
#include "spinphase/simd/kernels.hpp"

namespace spinphase {
namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

double unit_interval(std::uint64_t bits) {
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

// Krylov basis storage is capped near 1.5 GB.
constexpr double kBasisByteBudget = 1.5e9;

struct LanczosRun {
  const LinearOperator& apply;
  std::size_t dim;
  const LanczosOptions& opt;
  const std::vector<Complex>* deflate;  // project this direction out, may be null
  const simd::KernelTable& k = simd::active_kernels();

  void project_out(std::vector<Complex>& w) const {
    if (deflate == nullptr) return;
    const Complex c = k.dotc(deflate->data(), w.data(), dim);
    k.axpy(-c, deflate->data(), w.data(), dim);
  }

  void apply_op(const std::vector<Complex>& x, std::vector<Complex>& y) const {
    apply(x, y);
    project_out(y);
  }

  double normalize(std::vector<Complex>& v) const {
    const double nrm = std::sqrt(k.norm_sq(v.data(), dim));
    if (nrm > 0.0) k.scale(Complex(1.0 / nrm, 0.0), v.data(), dim);
    return nrm;
  }

  GroundStateResult solve() const {
    if (dim == 0) throw InvalidArgument("ground_state: empty operator");
    if (!(opt.tol > 0.0)) throw InvalidArgument("ground_state: tol must be positive");
    if (opt.max_krylov < 2) throw InvalidArgument("ground_state: max_krylov must be >= 2");
    if (dim > (std::size_t{1} << kMaxSites)) {
      throw InvalidArgument("ground_state: dimension " + std::to_string(dim) +
                            " exceeds 2^" + std::to_string(kMaxSites));
    }

    const auto mem_cap = static_cast<std::size_t>(
        std::max(8.0, kBasisByteBudget / (16.0 * static_cast<double>(dim))));
    const std::size_t cap =
        std::min({static_cast<std::size_t>(opt.max_krylov), dim, mem_cap});

    std::vector<Complex> start = seeded_random_vector(dim, opt.seed);
    project_out(start);
    if (normalize(start) == 0.0) throw NumericalFailure("ground_state: degenerate start vector");

    GroundStateResult best;
    best.residual_norm = std::numeric_limits<double>::infinity();
    int applications = 0;
    double previous_residual = std::numeric_limits<double>::infinity();

    std::vector<Complex> w(dim);
    for (int cycle = 0; cycle <= opt.max_restarts; ++cycle) {
      std::vector<std::vector<Complex>> basis;
      basis.reserve(cap);
      basis.push_back(start);
      std::vector<double> alpha;
      std::vector<double> beta;
      Eigen::VectorXd ritz_coeffs;
      double theta = 0.0;

      for (std::size_t m = 0;; ++m) {
        apply_op(basis[m], w);
        ++applications;
        const double a = k.dotc(basis[m].data(), w.data(), dim).real();
        k.axpy(Complex(-a, 0.0), basis[m].data(), w.data(), dim);
        if (m > 0) k.axpy(Complex(-beta[m - 1], 0.0), basis[m - 1].data(), w.data(), dim);
        // Full reorthogonalization, two passes of classical Gram-Schmidt.
        for (int pass = 0; pass < 2; ++pass) {
          for (const auto& v : basis) {
            const Complex c = k.dotc(v.data(), w.data(), dim);
            k.axpy(-c, v.data(), w.data(), dim);
          }
          project_out(w);
        }
        const double b = std::sqrt(k.norm_sq(w.data(), dim));
        alpha.push_back(a);

        const auto size = static_cast<Eigen::Index>(alpha.size());
        Eigen::VectorXd diag = Eigen::Map<const Eigen::VectorXd>(alpha.data(), size);
        Eigen::VectorXd sub(std::max<Eigen::Index>(size - 1, 0));
        for (Eigen::Index j = 0; j + 1 < size; ++j) sub(j) = beta[static_cast<std::size_t>(j)];
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> tri;
        tri.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
        theta = tri.eigenvalues()(0);
        ritz_coeffs = tri.eigenvectors().col(0);
        const double estimate = b * std::abs(ritz_coeffs(size - 1));

        const double scale = std::max(1.0, std::abs(theta));
        if (estimate <= 0.25 * opt.tol || b <= 1e-14 * scale || m + 1 >= cap) break;
        beta.push_back(b);
        std::vector<Complex> next = w;
        k.scale(Complex(1.0 / b, 0.0), next.data(), dim);
        basis.push_back(std::move(next));
      }

      std::vector<Complex> x(dim);
      for (std::size_t j = 0; j < basis.size(); ++j) {
        k.axpy(Complex(ritz_coeffs(static_cast<Eigen::Index>(j)), 0.0), basis[j].data(),
               x.data(), dim);
      }
      project_out(x);
      normalize(x);
      apply_op(x, w);
      ++applications;
      const double energy = k.dotc(x.data(), w.data(), dim).real();
      k.axpy(Complex(-energy, 0.0), x.data(), w.data(), dim);
      const double residual = std::sqrt(k.norm_sq(w.data(), dim));

      if (residual < best.residual_norm) {
        best.energy = energy;
        best.vector = x;
        best.residual_norm = residual;
      }
      best.iterations = applications;
      if (residual <= opt.tol) return best;

      start = best.vector;
      if (residual > 0.5 * previous_residual) {
        // Stagnating: mix in a fresh deterministic direction.
        auto fresh = seeded_random_vector(dim, opt.seed + static_cast<std::uint64_t>(cycle) + 1);
        project_out(fresh);
        normalize(fresh);
        k.axpy(Complex(1e-3, 0.0), fresh.data(), start.data(), dim);
        normalize(start);
      }
      previous_residual = std::min(previous_residual, residual);
    }
    throw NumericalFailure("ground_state: no convergence after " +
                               std::to_string(opt.max_restarts) +
                               " restarts, best residual " +
                               std::to_string(best.residual_norm),
                           best.residual_norm);
  }
};

}  // namespace

std::vector<Complex> seeded_random_vector(std::size_t dim, std::uint64_t seed) {
  std::vector<Complex> v(dim);
  const std::uint64_t base = splitmix64(seed ^ 0x5851f42d4c957f2dULL);
  for (std::size_t i = 0; i < dim; ++i) {
    const std::uint64_t r0 = splitmix64(base + 2 * i);
    const std::uint64_t r1 = splitmix64(base + 2 * i + 1);
    v[i] = Complex(2.0 * unit_interval(r0) - 1.0, 2.0 * unit_interval(r1) - 1.0);
  }
  return v;
}

GroundStateResult ground_state(const LinearOperator& apply, std::size_t dim,
                               const LanczosOptions& options) {
  return LanczosRun{apply, dim, options, nullptr}.solve();
}

GroundStateResult first_excited_state(const LinearOperator& apply, std::size_t dim,
                                      const std::vector<Complex>& ground,
                                      const LanczosOptions& options) {
  if (ground.size() != dim) throw InvalidArgument("first_excited_state: dimension mismatch");
  if (dim < 2) throw InvalidArgument("first_excited_state: needs dim >= 2");
  return LanczosRun{apply, dim, options, &ground}.solve();
}

DenseEigen dense_eigh(const Eigen::MatrixXcd& matrix) {
  if (matrix.rows() != matrix.cols()) throw InvalidArgument("dense_eigh: matrix is not square");
  if (matrix.rows() > kDenseEighMaxDim) {
    throw InvalidArgument("dense_eigh: dimension " + std::to_string(matrix.rows()) +
                          " exceeds " + std::to_string(kDenseEighMaxDim));
  }
  const double asym = (matrix - matrix.adjoint()).cwiseAbs().maxCoeff();
  if (matrix.size() > 0 && asym > 1e-10) {
    throw InvalidArgument("dense_eigh: matrix not Hermitian (deviation " +
                          std::to_string(asym) + ")");
  }
  const Eigen::MatrixXcd sym = 0.5 * (matrix + matrix.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(sym);
  if (solver.info() != Eigen::Success) throw NumericalFailure("dense_eigh: solver failed");
  return {solver.eigenvalues(), solver.eigenvectors()};
}

}  // namespace spinphase
