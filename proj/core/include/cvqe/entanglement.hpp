#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <iosfwd>
#include <string>

#include "cvqe/statevector.hpp"

namespace cvqe {

/**
 * Pairwise qubit mutual information I_ij = (S_i + S_j - S_ij)/2 in nats.
 * Symmetric, nonnegative, zero diagonal; bounded by 2 ln 2 per pair.
 */
struct MIMatrix {
  std::uint32_t n = 0;
  Eigen::MatrixXd values;

  double operator()(std::uint32_t i, std::uint32_t j) const {
    return values(i, j);
  }

  /// Row-major CSV with a header row of qubit indices.
  std::string to_csv() const;
  static MIMatrix from_csv(std::istream& in);
  static MIMatrix from_csv_file(const std::string& path);
};

/// Single-qubit reduced density matrix (partial trace over the rest).
Eigen::Matrix2cd rdm1(const StateVector& s, std::uint32_t i);

/// Two-qubit reduced density matrix keeping (i, j), with qubit i the first
/// tensor factor: a product state gives kron(rdm1(i), rdm1(j)).
Eigen::Matrix4cd rdm2(const StateVector& s, std::uint32_t i, std::uint32_t j);

/// -sum lambda ln lambda over the spectrum; eigenvalues <= 1e-14 contribute
/// nothing. Throws if rho is not Hermitian PSD with unit trace (tol 1e-8).
double von_neumann_entropy(const Eigen::MatrixXcd& rho);

/// Assemble the full pairwise mutual-information matrix of a state.
MIMatrix mutual_information(const StateVector& s);

/// Elementwise generalized correlation r_ij = sqrt(1 - exp(-2 I_ij / d)).
Eigen::MatrixXd generalized_correlation(const MIMatrix& mi, double d);

}  // namespace cvqe
