#include "cvqe/entanglement.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace cvqe {

namespace {

constexpr double kRhoTol = 1e-8;
constexpr double kEigFloor = 1e-14;

void check_density_matrix(const Eigen::MatrixXcd& rho) {
  if (rho.rows() != rho.cols()) {
    throw std::invalid_argument("density matrix must be square");
  }
  if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > kRhoTol) {
    throw std::invalid_argument("density matrix is not Hermitian");
  }
  if (std::abs(rho.trace().real() - 1.0) > kRhoTol ||
      std::abs(rho.trace().imag()) > kRhoTol) {
    throw std::invalid_argument("density matrix trace differs from 1");
  }
}

}  // namespace

Eigen::Matrix2cd rdm1(const StateVector& s, std::uint32_t i) {
  if (i >= s.n_qubits()) throw std::invalid_argument("qubit index out of range");
  Eigen::Matrix2cd rho = Eigen::Matrix2cd::Zero();
  const auto& amp = s.amplitudes();
  const std::uint64_t bit = std::uint64_t{1} << i;
  for (std::uint64_t b = 0; b < amp.size(); ++b) {
    const int r = (b >> i) & 1;
    // Pair b with the index differing only in qubit i.
    rho(r, r) += amp[b] * std::conj(amp[b]);
    rho(r, 1 - r) += amp[b] * std::conj(amp[b ^ bit]);
  }
  return rho;
}

Eigen::Matrix4cd rdm2(const StateVector& s, std::uint32_t i, std::uint32_t j) {
  if (i >= s.n_qubits() || j >= s.n_qubits()) {
    throw std::invalid_argument("qubit index out of range");
  }
  if (i == j) throw std::invalid_argument("rdm2 requires distinct qubits");
  Eigen::Matrix4cd rho = Eigen::Matrix4cd::Zero();
  const auto& amp = s.amplitudes();
  const std::uint64_t bi = std::uint64_t{1} << i, bj = std::uint64_t{1} << j;
  for (std::uint64_t b = 0; b < amp.size(); ++b) {
    const int r = static_cast<int>(((b >> i) & 1) << 1 | ((b >> j) & 1));
    for (int c = 0; c < 4; ++c) {
      std::uint64_t bc = b;
      bc = (c & 2) ? (bc | bi) : (bc & ~bi);
      bc = (c & 1) ? (bc | bj) : (bc & ~bj);
      rho(r, c) += amp[b] * std::conj(amp[bc]);
    }
  }
  return rho;
}

double von_neumann_entropy(const Eigen::MatrixXcd& rho) {
  check_density_matrix(rho);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(rho);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("entropy eigensolver failed");
  }
  double entropy = 0;
  for (Eigen::Index k = 0; k < solver.eigenvalues().size(); ++k) {
    const double lam = solver.eigenvalues()(k);
    if (lam < -kRhoTol) {
      throw std::invalid_argument("density matrix is not PSD");
    }
    if (lam > kEigFloor) entropy -= lam * std::log(lam);
  }
  return entropy;
}

MIMatrix mutual_information(const StateVector& s) {
  const std::uint32_t n = s.n_qubits();
  MIMatrix mi;
  mi.n = n;
  mi.values = Eigen::MatrixXd::Zero(n, n);

  std::vector<double> s1(n);
  for (std::uint32_t i = 0; i < n; ++i) s1[i] = von_neumann_entropy(rdm1(s, i));

  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = i + 1; j < n; ++j) {
      const double sij = von_neumann_entropy(rdm2(s, i, j));
      const double v = std::max(0.0, 0.5 * (s1[i] + s1[j] - sij));
      mi.values(i, j) = mi.values(j, i) = v;
    }
  }
  return mi;
}

Eigen::MatrixXd generalized_correlation(const MIMatrix& mi, double d) {
  if (d <= 0) throw std::invalid_argument("dimensionality must be positive");
  Eigen::MatrixXd r = Eigen::MatrixXd::Zero(mi.n, mi.n);
  for (std::uint32_t i = 0; i < mi.n; ++i) {
    for (std::uint32_t j = 0; j < mi.n; ++j) {
      if (i == j) continue;
      r(i, j) = std::sqrt(1.0 - std::exp(-2.0 * mi.values(i, j) / d));
    }
  }
  return r;
}

std::string MIMatrix::to_csv() const {
  std::string out;
  char buf[48];
  for (std::uint32_t j = 0; j < n; ++j) {
    std::snprintf(buf, sizeof buf, "%u", j);
    out += buf;
    out += (j + 1 < n) ? ',' : '\n';
  }
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = 0; j < n; ++j) {
      std::snprintf(buf, sizeof buf, "%.12g", values(i, j));
      out += buf;
      out += (j + 1 < n) ? ',' : '\n';
    }
  }
  return out;
}

MIMatrix MIMatrix::from_csv(std::istream& in) {
  std::vector<std::vector<double>> rows;
  std::string line;
  bool header_skipped = false;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (!header_skipped) {
      header_skipped = true;
      continue;
    }
    std::vector<double> row;
    std::stringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) row.push_back(std::stod(cell));
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw std::runtime_error("empty MI CSV");
  MIMatrix mi;
  mi.n = static_cast<std::uint32_t>(rows.size());
  mi.values = Eigen::MatrixXd::Zero(mi.n, mi.n);
  for (std::uint32_t i = 0; i < mi.n; ++i) {
    if (rows[i].size() != mi.n) {
      throw std::runtime_error("ragged MI CSV row " + std::to_string(i));
    }
    for (std::uint32_t j = 0; j < mi.n; ++j) mi.values(i, j) = rows[i][j];
  }
  return mi;
}

MIMatrix MIMatrix::from_csv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open MI CSV: " + path);
  try {
    return from_csv(in);
  } catch (const std::exception& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

}  // namespace cvqe
