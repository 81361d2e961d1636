#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cvqe/exact.hpp"
#include "cvqe/optimizer.hpp"
#include "cvqe/partition.hpp"
#include "cvqe/pool.hpp"
#include "cvqe/qubo.hpp"
#include "cvqe/statevector.hpp"

namespace cvqe {

enum class EngineKind { Vqe, AdaptVqe, Iqcc, ClusterVqe };

enum class Placement { Monolithic, IntraCluster, CrossCluster };

/// One pool generator placed in the ansatz, with its variational angle.
struct AnsatzElement {
  PauliWord generator;
  double angle = 0.0;
  int selected_at = 0;  // 1-based iteration of selection
  Placement placement = Placement::Monolithic;
  int cluster = -1;  // valid for IntraCluster
};

enum class ClusteringMode { Fixed, SpinFallback, OnTheFly };

struct EngineConfig {
  EngineKind kind = EngineKind::ClusterVqe;
  double epsilon = 1e-4;  // pool-gradient convergence threshold
  int max_iterations = 25;
  double dressing_prune_tol = 1e-10;

  ClusteringMode clustering_mode = ClusteringMode::SpinFallback;
  std::optional<Clustering> clustering;  // required for Fixed
  std::uint32_t n_clusters = 2;
  std::optional<std::vector<std::uint32_t>> capacities;
  PartitionMethod on_the_fly_method = PartitionMethod::Exhaustive;

  double optimizer_grad_tol = 1e-8;
  int optimizer_max_evaluations = 20000;

  bool iqcc_exclude_used = false;    // drop already-folded generators from the pool
  bool freeze_cross_angles = false;  // iQCC-style frozen dressers in ClusterVQE
  std::uint64_t seed = 0;            // stochastic partition solvers only
};

struct IterationRecord {
  int iteration = 0;  // 1-based
  std::optional<PauliWord> selected;
  Placement placement = Placement::Monolithic;
  int cluster = -1;
  double energy = 0;
  double max_gradient = 0;
  std::size_t term_count = 0;  // current (dressed) Hamiltonian size
  std::vector<double> parameters;
  double wall_seconds = 0;
};

struct EngineResult {
  std::vector<IterationRecord> records;
  double final_energy = 0;
  bool converged = false;  // gradient exit reached within the budget
  std::vector<AnsatzElement> ansatz;
  Clustering clustering;  // final clustering (single cluster for monolithic engines)
  std::vector<std::string> warnings;
};

/// Problem artifacts shared by every engine.
struct Problem {
  PauliSum hamiltonian;
  OperatorPool pool;
  std::uint64_t reference_mask = 0;
};

/**
 * Product of per-cluster statevectors. Each cluster holds its slice of the
 * reference occupation plus its own circuit; expectation values of
 * full-register words factorize into per-cluster expectations of the
 * restricted words.
 */
class ClusteredState {
 public:
  ClusteredState(const Clustering& clustering, std::uint64_t reference_mask);

  std::uint32_t n_clusters() const {
    return static_cast<std::uint32_t>(states_.size());
  }
  const std::vector<std::uint32_t>& cluster_qubits(std::uint32_t c) const {
    return qubits_[c];
  }
  const StateVector& state(std::uint32_t c) const { return states_[c]; }

  /// Apply a rotation generated by a full-register word that acts only
  /// inside cluster c.
  void apply_intra_rotation(std::uint32_t c, const PauliWord& full_word,
                            double angle);

  Complex expect_word(const PauliWord& full_word) const;
  Complex expect_sum_complex(const PauliSum& s) const;
  /// Real expectation of a Hermitian sum (imaginary part asserted small).
  double expect_sum(const PauliSum& s) const;

 private:
  std::vector<std::vector<std::uint32_t>> qubits_;
  std::vector<StateVector> states_;
};

/// Index of the entry with the largest |gradient|; ties break to the
/// smallest index.
std::size_t select_entangler(std::span<const double> gradients);

/// Pool-selection gradients i<psi|[H_eff, P_k]|psi> at theta_k = 0.
std::vector<double> pool_gradients(const PauliSum& h_eff,
                                   const StateVector& psi,
                                   const OperatorPool& pool);
std::vector<double> pool_gradients(const PauliSum& h_eff,
                                   const ClusteredState& psi,
                                   const OperatorPool& pool);

/**
 * Conjugate H by the listed entanglers (selection order; the most recently
 * selected dresser conjugates first), pruning after each pass.
 */
PauliSum dress_hamiltonian(const PauliSum& h,
                           std::span<const std::pair<PauliWord, double>> dressers,
                           double tol = kPruneTol);

/// Dressed Hamiltonian together with its analytic angle derivatives
/// d H_d / d theta_k, propagated through the remaining conjugation passes.
struct DressedBundle {
  PauliSum h_d;
  std::vector<PauliSum> derivatives;  // one per dresser, selection order
};
DressedBundle dress_with_derivatives(
    const PauliSum& h, std::span<const std::pair<PauliWord, double>> dressers,
    double tol = kPruneTol);

/**
 * Cluster-factorized energy sum_k alpha_k prod_i <P_k(c_i)> for per-cluster
 * circuits built from IntraCluster elements. Throws if an element touches
 * qubits outside its cluster.
 */
double clustered_energy(const PauliSum& h_d, const Clustering& clustering,
                        std::span<const AnsatzElement> circuit_elements,
                        std::uint64_t reference_mask);

/**
 * Energy and analytic gradient of E(theta) = <psi|H|psi> with
 * |psi> = U_M...U_1 |reference>, U_t = exp(i theta_t P_t), via one reverse
 * sweep (no finite differences).
 */
double circuit_energy_and_gradient(const StateVector& reference,
                                   std::span<const PauliWord> words,
                                   std::span<const double> angles,
                                   const PauliSum& h,
                                   std::span<double> gradients);

/// Reconstruct the full-register state of a clustered ansatz: intra
/// elements first (selection order), then cross elements (selection order).
StateVector full_register_state(std::uint32_t n_qubits,
                                std::uint64_t reference_mask,
                                std::span<const AnsatzElement> elements);

/// Full-register expectation of the bare Hamiltonian for a clustered
/// ansatz snapshot (the dual route of clustered_energy's Eq.-style
/// factorization).
double full_register_energy(const PauliSum& h, std::uint64_t reference_mask,
                            std::span<const AnsatzElement> elements);

/// Quasi-Newton minimization entry point shared by all engines.
MinimizeResult minimize_energy(const Objective& objective,
                               std::vector<double> x0,
                               const EngineConfig& config);

EngineResult run_engine(const EngineConfig& config, const Problem& problem);

std::string engine_kind_name(EngineKind k);
EngineKind engine_kind_from_name(const std::string& name);
std::string placement_name(EngineKind kind, Placement p, int cluster);

}  // namespace cvqe
