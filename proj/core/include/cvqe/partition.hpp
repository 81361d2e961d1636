#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cvqe/entanglement.hpp"

namespace cvqe {

/// Surjective map qubit index -> cluster id with optional per-cluster
/// capacity limits. Canonical form relabels ids by first appearance, so
/// qubit 0 always lives in cluster 0.
struct Clustering {
  std::vector<std::uint32_t> assignment;
  std::uint32_t n_clusters = 0;

  Clustering() = default;
  Clustering(std::vector<std::uint32_t> assign, std::uint32_t m);

  static Clustering single_cluster(std::uint32_t n);
  /// Alpha block then beta block (the spin-index fallback grouping).
  static Clustering spin_halves(std::uint32_t n);

  std::uint32_t n_qubits() const {
    return static_cast<std::uint32_t>(assignment.size());
  }
  std::vector<std::uint32_t> cluster_qubits(std::uint32_t c) const;
  std::vector<std::uint32_t> sizes() const;
  std::uint64_t cluster_mask(std::uint32_t c) const;

  /// Every id in [0, n_clusters) used; capacities respected when given.
  bool feasible(const std::optional<std::vector<std::uint32_t>>& capacities =
                    {}) const;
  Clustering canonicalized() const;

  bool operator==(const Clustering& o) const = default;

  std::string to_json() const;
  static Clustering from_json(const std::string& text);
  static Clustering from_json_file(const std::string& path);
};

/// Sum of I_ij over pairs assigned to different clusters.
double intercluster_mi(const MIMatrix& mi, const Clustering& c);

/**
 * Global minimizer of intercluster_mi over all feasible M-clusterings,
 * by enumeration (guarded: bipartitions up to 16 qubits). Ties break to
 * the lexicographically smallest canonical assignment.
 */
Clustering exhaustive_partition(
    const MIMatrix& mi, std::uint32_t m,
    const std::optional<std::vector<std::uint32_t>>& capacities = {});

/**
 * Best-improvement local refinement (single-qubit moves and pair swaps)
 * from a feasible seed until no move lowers the objective. Deterministic
 * for a fixed seed clustering.
 */
Clustering refine_partition(
    const MIMatrix& mi, std::uint32_t m,
    const std::optional<std::vector<std::uint32_t>>& capacities,
    const Clustering& seed);

}  // namespace cvqe
