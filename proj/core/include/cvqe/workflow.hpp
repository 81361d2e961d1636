#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cvqe/engine.hpp"

namespace cvqe {

/// Bad invocation (missing/contradictory arguments): exit code 64.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
/// Unreadable or inconsistent data: exit code 65.
struct DataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Problem artifacts plus enough provenance to fingerprint a run.
struct ProblemBundle {
  Problem problem;
  int n_electrons = 0;
  int ms2 = 0;
  std::string source;
  std::string kind;  // "fcidump" | "pauli"
  std::string fingerprint;
};

ProblemBundle load_problem_from_fcidump(const std::string& path);
/// Pauli-sum text input; the pool is the qubit-UCCSD pool for the register
/// dimensions (blocked spin order, ms2 = 0).
ProblemBundle load_problem_from_pauli(const std::string& path, int electrons);

void write_bundle(const ProblemBundle& bundle, const std::string& dir);
ProblemBundle load_bundle(const std::string& dir);

std::string fingerprint_problem(const PauliSum& h, int electrons);

struct RunConfig {
  std::string input;  // bundle dir, FCIDUMP, or Pauli text file
  int electrons = -1;  // required for Pauli text input
  EngineKind engine = EngineKind::ClusterVqe;
  double epsilon = 1e-4;
  int max_iterations = 25;
  double dressing_prune_tol = 1e-10;
  std::uint32_t n_clusters = 2;
  std::vector<std::uint32_t> capacities;  // empty = unconstrained
  std::string cluster_method = "exhaustive";  // or refine/qubo-mi/qubo-modularity/spin
  std::string clustering_file;  // explicit assignment, bypasses partitioning
  bool on_the_fly = false;
  std::string output_dir;
  std::uint64_t seed = 0;
  double optimizer_grad_tol = 1e-8;
  int optimizer_max_evaluations = 20000;
};

struct RunOutcome {
  int exit_code = 0;  // 0 converged, 2 budget stop
  std::string run_dir;
  double final_energy = 0;
  double exact_energy = 0;
  EngineResult result;
};

/// Load input, resolve the clustering, run the engine, and write
/// iterations.csv, manifest.json, clustering.json, and exact_energy.txt.
RunOutcome run_to_directory(const RunConfig& config);

/// Merge >= 2 runs on the same problem into one comparison CSV
/// (error and term count per iteration per run, plus the exact energy).
std::string compare_runs(const std::vector<std::string>& run_dirs);

struct MiReport {
  MIMatrix mi;
  std::vector<std::pair<std::string, Clustering>> clusterings;
  std::vector<std::pair<std::string, double>> objectives;
};

/// MI matrix of the exact ground state (or of a finished run's final
/// state) plus the clustering every partition method produces for it.
MiReport mi_artifacts(const std::string& input, int electrons,
                      const std::string& from_run, std::uint32_t n_clusters,
                      const std::optional<std::vector<std::uint32_t>>& capacities,
                      std::uint64_t seed);
void write_mi_report(const MiReport& report, const std::string& dir);

/// Formats a double with 12 significant digits (the CSV convention).
std::string csv_double(double v);

}  // namespace cvqe
