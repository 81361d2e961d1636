#pragma once

#include <Eigen/Dense>

#include <cstdint>

#include "cvqe/partition.hpp"

namespace cvqe {

/// Minimization problem x^T Q x over bit vectors, evaluated with the full
/// (not upper-triangle) matrix convention.
struct QuboProblem {
  Eigen::MatrixXd q;

  std::uint32_t size() const { return static_cast<std::uint32_t>(q.rows()); }
  double energy(std::uint64_t bits) const;
};

/**
 * MI-selection QUBO Q = -I + lambda R, where R has unit off-diagonal and
 * diagonal 1 - 2 f S (S = qubit count). Under the full-matrix convention
 * the penalty term alone evaluates to lambda K (K - 2 f S) for K selected
 * qubits, so its minimum restricts the selection size to K = f S.
 */
QuboProblem build_mi_selection_qubo(const MIMatrix& mi, double target_fraction,
                                    double lambda);

/**
 * Modularity QUBO: A = |MI| with zero diagonal, weighted degrees
 * d_i = sum_j A_ij, 2m = sum_i d_i, B_ij = A_ij - d_i d_j / (2m).
 * Maximizing x^T B x is posed as minimizing Q = -B. Rows of B sum to zero.
 */
QuboProblem build_modularity_qubo(const MIMatrix& mi);

struct AnnealOptions {
  std::uint64_t seed = 0;
  double cooling = 0.995;
  int sweeps_per_site = 200;  // total sweeps = this * n
};

/// True minimizer by enumeration (n <= 22); ties break to the smallest
/// bit pattern.
std::uint64_t solve_qubo_exhaustive(const QuboProblem& q);

/// Geometric-cooling single-flip Metropolis annealer; deterministic per
/// seed; returns the best-seen vector.
std::uint64_t solve_qubo_annealing(const QuboProblem& q,
                                   const AnnealOptions& opts = {});

/// Interpret a selection mask as a bipartition (selected | complement).
Clustering bipartition_from_bits(std::uint64_t bits, std::uint32_t n);

enum class PartitionMethod { Exhaustive, Refine, QuboMiSelection, QuboModularity };

/**
 * One-call clustering driver. QUBO methods bipartition (recursively for
 * M > 2); Refine seeds from contiguous blocks sized by the capacities.
 */
Clustering compute_clustering(
    const MIMatrix& mi, std::uint32_t m,
    const std::optional<std::vector<std::uint32_t>>& capacities,
    PartitionMethod method, std::uint64_t seed = 0);

std::string partition_method_name(PartitionMethod m);
PartitionMethod partition_method_from_name(const std::string& name);

}  // namespace cvqe
