#include "cvqe/exact.hpp"

#include <Eigen/Dense>

#include <bit>
#include <cmath>
#include <random>
#include <stdexcept>

namespace cvqe {

namespace {

constexpr std::size_t kDenseFullLimit = 1u << 10;
constexpr std::size_t kDenseSectorLimit = 2048;

std::vector<std::uint64_t> sector_basis(std::uint32_t n, int electrons) {
  if (electrons < 0 || electrons > static_cast<int>(n)) {
    throw std::invalid_argument("particle sector out of range");
  }
  std::vector<std::uint64_t> basis;
  for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b) {
    if (std::popcount(b) == electrons) basis.push_back(b);
  }
  return basis;
}

GroundState dense_solve(const PauliSum& h,
                        const std::vector<std::uint64_t>& basis) {
  const std::uint32_t n = h.n_qubits();
  const std::size_t m = basis.size();
  std::vector<std::int64_t> pos(std::size_t{1} << n, -1);
  for (std::size_t j = 0; j < m; ++j) pos[basis[j]] = static_cast<std::int64_t>(j);

  Eigen::MatrixXcd mat = Eigen::MatrixXcd::Zero(m, m);
  for (std::size_t j = 0; j < m; ++j) {
    StateVector col = StateVector::basis_state(n, basis[j]);
    StateVector hcol = apply_sum(h, col);
    for (std::size_t i = 0; i < m; ++i) {
      mat(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          hcol.amplitude(basis[i]);
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(mat);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("dense eigensolver failed");
  }
  const Eigen::Index lo = 0;
  StateVector state(n);
  for (std::size_t i = 0; i < m; ++i) {
    state.amplitudes()[basis[i]] = solver.eigenvectors()(static_cast<Eigen::Index>(i), lo);
  }
  state.normalize();
  return {solver.eigenvalues()(lo), state};
}

void project_sector(std::vector<Complex>& v, std::optional<int> electrons) {
  if (!electrons) return;
  for (std::uint64_t b = 0; b < v.size(); ++b) {
    if (std::popcount(b) != *electrons) v[b] = Complex(0, 0);
  }
}

double vec_norm(const std::vector<Complex>& v) {
  double s = 0;
  for (const auto& a : v) s += std::norm(a);
  return std::sqrt(s);
}

Complex vec_dot(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  Complex s(0, 0);
  for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

GroundState lanczos_solve(const PauliSum& h, std::optional<int> electrons) {
  const std::uint32_t n = h.n_qubits();
  const std::size_t dim = std::size_t{1} << n;
  const int max_steps = 240;
  const int max_restarts = 6;
  const double scale = std::max(1.0, h.coefficient_norm());

  auto matvec = [&](const std::vector<Complex>& in) {
    StateVector sv(n);
    sv.amplitudes() = in;
    std::vector<Complex> out = apply_sum(h, sv).amplitudes();
    project_sector(out, electrons);
    return out;
  };

  // Deterministic start vector biased toward the lowest-index sector state
  // (the HF determinant for chemistry Hamiltonians).
  std::vector<Complex> v0(dim, Complex(0, 0));
  {
    std::mt19937_64 rng(12345);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (auto& a : v0) a = Complex(u(rng), u(rng));
    project_sector(v0, electrons);
    std::uint64_t anchor = 0;
    if (electrons) anchor = (std::uint64_t{1} << *electrons) - 1;
    const double vn = vec_norm(v0);
    if (vn == 0) throw std::invalid_argument("empty particle sector");
    for (auto& a : v0) a *= 1e-2 / vn;
    v0[anchor] += 1.0;
    project_sector(v0, electrons);
  }

  for (int restart = 0; restart < max_restarts; ++restart) {
    const double n0 = vec_norm(v0);
    for (auto& a : v0) a /= n0;

    std::vector<std::vector<Complex>> basis{v0};
    std::vector<double> alpha, beta;
    for (int k = 0; k < max_steps; ++k) {
      std::vector<Complex> w = matvec(basis.back());
      const double a = vec_dot(basis.back(), w).real();
      alpha.push_back(a);
      // Full reorthogonalization, twice for stability.
      for (int pass = 0; pass < 2; ++pass) {
        for (const auto& q : basis) {
          const Complex c = vec_dot(q, w);
          for (std::size_t i = 0; i < dim; ++i) w[i] -= c * q[i];
        }
      }
      const double b = vec_norm(w);
      if (b < 1e-13 * scale) break;
      beta.push_back(b);
      for (auto& e : w) e /= b;
      basis.push_back(std::move(w));
    }

    const std::size_t m = alpha.size();
    Eigen::MatrixXd tri = Eigen::MatrixXd::Zero(m, m);
    for (std::size_t i = 0; i < m; ++i) {
      tri(i, i) = alpha[i];
      if (i + 1 < m) tri(i, i + 1) = tri(i + 1, i) = beta[i];
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(tri);
    const double ritz = solver.eigenvalues()(0);
    std::vector<Complex> x(dim, Complex(0, 0));
    for (std::size_t i = 0; i < m; ++i) {
      const double c = solver.eigenvectors()(static_cast<Eigen::Index>(i), 0);
      for (std::size_t j = 0; j < dim; ++j) x[j] += c * basis[i][j];
    }
    project_sector(x, electrons);
    const double xn = vec_norm(x);
    for (auto& a : x) a /= xn;

    std::vector<Complex> hx = matvec(x);
    double resid = 0;
    for (std::size_t j = 0; j < dim; ++j) resid += std::norm(hx[j] - ritz * x[j]);
    resid = std::sqrt(resid);
    if (resid <= 1e-10 * scale || restart == max_restarts - 1) {
      StateVector state(n);
      state.amplitudes() = x;
      state.normalize();
      return {ritz, state};
    }
    v0 = std::move(x);
  }
  throw std::runtime_error("Lanczos failed to converge");
}

}  // namespace

GroundState exact_ground_state(const PauliSum& h,
                               std::optional<int> particle_sector) {
  if (h.n_qubits() == 0) throw std::invalid_argument("empty Hamiltonian");
  if (h.n_qubits() > kMaxSimQubits) {
    throw std::invalid_argument("exact diagonalization guard: > " +
                                std::to_string(kMaxSimQubits) + " qubits");
  }
  if (!h.is_hermitian()) {
    throw std::invalid_argument("exact_ground_state requires Hermitian input");
  }
  const std::uint32_t n = h.n_qubits();
  if (particle_sector) {
    auto basis = sector_basis(n, *particle_sector);
    if (basis.size() <= kDenseSectorLimit) return dense_solve(h, basis);
    return lanczos_solve(h, particle_sector);
  }
  if ((std::size_t{1} << n) <= kDenseFullLimit) {
    std::vector<std::uint64_t> basis(std::size_t{1} << n);
    for (std::size_t i = 0; i < basis.size(); ++i) basis[i] = i;
    return dense_solve(h, basis);
  }
  return lanczos_solve(h, {});
}

}  // namespace cvqe
