#include "cvqe/workflow.hpp"

#include <nlohmann/json.hpp>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace cvqe {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write file: " + path);
  out << content;
}

json load_json(const std::string& path) {
  try {
    return json::parse(read_file(path));
  } catch (const json::parse_error& e) {
    throw DataError(path + ": " + e.what());
  }
}

}  // namespace

std::string csv_double(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string fingerprint_problem(const PauliSum& h, int electrons) {
  const std::string text =
      h.to_text() + "\nelectrons=" + std::to_string(electrons);
  std::uint64_t hash = 1469598103934665603ull;  // FNV-1a
  for (unsigned char c : text) {
    hash ^= c;
    hash *= 1099511628211ull;
  }
  char buf[20];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(hash));
  return buf;
}

ProblemBundle load_problem_from_fcidump(const std::string& path) {
  MolecularProblem mol;
  try {
    mol = load_fcidump(path);
  } catch (const std::exception& e) {
    throw DataError(e.what());
  }
  ProblemBundle b;
  b.problem.hamiltonian = build_qubit_hamiltonian(mol);
  b.problem.pool = build_uccsd_pool(mol);
  b.problem.reference_mask = hf_reference(mol);
  b.n_electrons = mol.n_electrons;
  b.ms2 = mol.ms2;
  b.source = path;
  b.kind = "fcidump";
  b.fingerprint = fingerprint_problem(b.problem.hamiltonian, b.n_electrons);
  return b;
}

ProblemBundle load_problem_from_pauli(const std::string& path, int electrons) {
  if (electrons < 0) {
    throw UsageError("Pauli-sum input needs an electron count");
  }
  PauliSum h;
  try {
    h = PauliSum::from_text(read_file(path));
  } catch (const std::exception& e) {
    throw DataError(e.what());
  }
  if (h.empty()) throw DataError("empty Pauli sum: " + path);
  if (h.n_qubits() % 2 != 0) {
    throw DataError("Pauli-sum input needs an even qubit count (blocked spins)");
  }
  // Shell problem carrying only the register dimensions; the qubit-UCCSD
  // pool depends on those alone.
  MolecularProblem shell;
  shell.n_spatial = static_cast<int>(h.n_qubits() / 2);
  shell.n_electrons = electrons;
  shell.ms2 = 0;
  shell.h1.assign(static_cast<std::size_t>(shell.n_spatial) * shell.n_spatial,
                  0.0);
  shell.h2.assign(static_cast<std::size_t>(shell.n_spatial) * shell.n_spatial *
                      shell.n_spatial * shell.n_spatial,
                  0.0);
  ProblemBundle b;
  b.problem.hamiltonian = h;
  b.problem.pool = build_uccsd_pool(shell);
  b.problem.reference_mask = hf_reference(shell);
  b.n_electrons = electrons;
  b.ms2 = 0;
  b.source = path;
  b.kind = "pauli";
  b.fingerprint = fingerprint_problem(h, electrons);
  return b;
}

void write_bundle(const ProblemBundle& b, const std::string& dir) {
  fs::create_directories(dir);
  write_file(dir + "/hamiltonian.txt", b.problem.hamiltonian.to_text());

  std::string pool_text;
  for (std::size_t k = 0; k < b.problem.pool.size(); ++k) {
    pool_text += b.problem.pool.generators[k].str();
    if (k < b.problem.pool.provenance.size()) {
      pool_text += ' ';
      pool_text += b.problem.pool.provenance[k].str();
    }
    pool_text += '\n';
  }
  write_file(dir + "/pool.txt", pool_text);

  json manifest{
      {"source", b.source},
      {"kind", b.kind},
      {"n_qubits", b.problem.hamiltonian.n_qubits()},
      {"n_electrons", b.n_electrons},
      {"ms2", b.ms2},
      {"hf_mask", b.problem.reference_mask},
      {"term_count", b.problem.hamiltonian.term_count()},
      {"pool_size", b.problem.pool.size()},
      {"fingerprint", b.fingerprint},
  };
  write_file(dir + "/bundle.json", manifest.dump(2) + "\n");
}

ProblemBundle load_bundle(const std::string& dir) {
  const json manifest = load_json(dir + "/bundle.json");
  ProblemBundle b;
  b.problem.hamiltonian = PauliSum::from_text(read_file(dir + "/hamiltonian.txt"));
  b.n_electrons = manifest.at("n_electrons").get<int>();
  b.ms2 = manifest.value("ms2", 0);
  b.problem.reference_mask = manifest.at("hf_mask").get<std::uint64_t>();
  b.source = manifest.value("source", dir);
  b.kind = manifest.value("kind", "bundle");
  b.fingerprint = manifest.at("fingerprint").get<std::string>();

  std::ifstream pool_in(dir + "/pool.txt");
  if (!pool_in) throw DataError("bundle missing pool.txt: " + dir);
  b.problem.pool.n_qubits = b.problem.hamiltonian.n_qubits();
  std::string line;
  while (std::getline(pool_in, line)) {
    std::istringstream ls(line);
    std::string letters;
    if (!(ls >> letters)) continue;
    b.problem.pool.generators.push_back(PauliWord::from_letters(letters));
  }
  if (b.fingerprint != fingerprint_problem(b.problem.hamiltonian, b.n_electrons)) {
    throw DataError("bundle fingerprint mismatch (edited hamiltonian?): " + dir);
  }
  return b;
}

namespace {

ProblemBundle load_any_input(const std::string& input, int electrons) {
  if (input.empty()) throw UsageError("no input given");
  if (fs::is_directory(input)) return load_bundle(input);
  if (!fs::exists(input)) throw DataError("input does not exist: " + input);
  // Sniff: FCIDUMP starts with &FCI, otherwise treat as a Pauli sum.
  std::ifstream in(input);
  std::string first;
  std::getline(in, first);
  if (first.find("&FCI") != std::string::npos) {
    return load_problem_from_fcidump(input);
  }
  return load_problem_from_pauli(input, electrons);
}

Clustering resolve_run_clustering(const RunConfig& cfg,
                                  const ProblemBundle& bundle,
                                  const GroundState& exact) {
  const std::uint32_t n = bundle.problem.hamiltonian.n_qubits();
  if (!cfg.clustering_file.empty()) {
    Clustering c = Clustering::from_json_file(cfg.clustering_file);
    if (c.n_qubits() != n) throw DataError("clustering file size mismatch");
    return c;
  }
  if (cfg.cluster_method == "spin") {
    return Clustering::spin_halves(n);
  }
  std::optional<std::vector<std::uint32_t>> caps;
  if (!cfg.capacities.empty()) caps = cfg.capacities;
  const MIMatrix mi = mutual_information(exact.state);
  return compute_clustering(mi, cfg.n_clusters, caps,
                            partition_method_from_name(cfg.cluster_method),
                            cfg.seed);
}

json elements_to_json(const EngineResult& result, EngineKind kind) {
  json arr = json::array();
  for (const auto& e : result.ansatz) {
    arr.push_back({{"generator", e.generator.str()},
                   {"angle", e.angle},
                   {"selected_at", e.selected_at},
                   {"placement", placement_name(kind, e.placement, e.cluster)},
                   {"cluster", e.cluster}});
  }
  return arr;
}

}  // namespace

RunOutcome run_to_directory(const RunConfig& cfg) {
  if (cfg.output_dir.empty()) throw UsageError("no output directory given");
  const auto t0 = std::chrono::steady_clock::now();
  ProblemBundle bundle = load_any_input(cfg.input, cfg.electrons);
  const std::uint32_t n = bundle.problem.hamiltonian.n_qubits();

  GroundState exact =
      exact_ground_state(bundle.problem.hamiltonian, bundle.n_electrons);

  EngineConfig ecfg;
  ecfg.kind = cfg.engine;
  ecfg.epsilon = cfg.epsilon;
  ecfg.max_iterations = cfg.max_iterations;
  ecfg.dressing_prune_tol = cfg.dressing_prune_tol;
  ecfg.optimizer_grad_tol = cfg.optimizer_grad_tol;
  ecfg.optimizer_max_evaluations = cfg.optimizer_max_evaluations;
  ecfg.seed = cfg.seed;
  ecfg.n_clusters = cfg.n_clusters;
  if (!cfg.capacities.empty()) ecfg.capacities = cfg.capacities;

  if (cfg.engine == EngineKind::ClusterVqe) {
    if (cfg.on_the_fly) {
      ecfg.clustering_mode = ClusteringMode::OnTheFly;
      ecfg.on_the_fly_method =
          cfg.cluster_method == "spin"
              ? PartitionMethod::Exhaustive
              : partition_method_from_name(cfg.cluster_method);
    } else if (cfg.cluster_method == "spin" && cfg.clustering_file.empty()) {
      ecfg.clustering_mode = ClusteringMode::SpinFallback;
    } else {
      ecfg.clustering_mode = ClusteringMode::Fixed;
      ecfg.clustering = resolve_run_clustering(cfg, bundle, exact);
      ecfg.n_clusters = ecfg.clustering->n_clusters;
    }
  }

  EngineResult result = run_engine(ecfg, bundle.problem);

  fs::create_directories(cfg.output_dir);
  // iterations.csv: one row per iteration, 12 significant digits.
  std::string csv =
      "iteration,energy,error_vs_exact,max_gradient,term_count,placement\n";
  for (const auto& r : result.records) {
    csv += std::to_string(r.iteration) + ',' + csv_double(r.energy) + ',' +
           csv_double(r.energy - exact.energy) + ',' +
           csv_double(r.max_gradient) + ',' + std::to_string(r.term_count) +
           ',' + placement_name(cfg.engine, r.placement, r.cluster) + '\n';
  }
  write_file(cfg.output_dir + "/iterations.csv", csv);
  write_file(cfg.output_dir + "/clustering.json",
             result.clustering.to_json() + "\n");
  write_file(cfg.output_dir + "/exact_energy.txt",
             csv_double(exact.energy) + "\n");

  json manifest{
      {"config",
       {{"input", cfg.input},
        {"electrons", bundle.n_electrons},
        {"engine", engine_kind_name(cfg.engine)},
        {"epsilon", cfg.epsilon},
        {"max_iterations", cfg.max_iterations},
        {"dressing_prune_tol", cfg.dressing_prune_tol},
        {"n_clusters", cfg.n_clusters},
        {"capacities", cfg.capacities},
        {"cluster_method", cfg.cluster_method},
        {"clustering_file", cfg.clustering_file},
        {"on_the_fly", cfg.on_the_fly},
        {"seed", cfg.seed},
        {"optimizer_grad_tol", cfg.optimizer_grad_tol},
        {"optimizer_max_evaluations", cfg.optimizer_max_evaluations}}},
      {"fingerprint", bundle.fingerprint},
      {"n_qubits", n},
      {"exact_energy", exact.energy},
      {"final_energy", result.final_energy},
      {"converged", result.converged},
      {"iterations", result.records.size()},
      {"elements", elements_to_json(result, cfg.engine)},
      {"clustering", result.clustering.assignment},
      {"warnings", result.warnings},
      {"wall_seconds",
       std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
           .count()},
  };
  write_file(cfg.output_dir + "/manifest.json", manifest.dump(2) + "\n");

  RunOutcome out;
  out.exit_code = result.converged ? 0 : 2;
  out.run_dir = cfg.output_dir;
  out.final_energy = result.final_energy;
  out.exact_energy = exact.energy;
  out.result = std::move(result);
  return out;
}

std::string compare_runs(const std::vector<std::string>& run_dirs) {
  if (run_dirs.size() < 2) {
    throw UsageError("compare needs at least two run directories");
  }
  struct Run {
    std::string name;
    json manifest;
    std::vector<std::vector<std::string>> rows;
  };
  std::vector<Run> runs;
  for (const auto& dir : run_dirs) {
    Run r;
    r.name = fs::path(dir).filename().string();
    if (r.name.empty()) r.name = dir;
    r.manifest = load_json(dir + "/manifest.json");
    std::ifstream csv(dir + "/iterations.csv");
    if (!csv) throw DataError("missing iterations.csv in " + dir);
    std::string line;
    std::getline(csv, line);  // header
    while (std::getline(csv, line)) {
      std::vector<std::string> cells;
      std::stringstream ls(line);
      std::string cell;
      while (std::getline(ls, cell, ',')) cells.push_back(cell);
      if (cells.size() >= 5) r.rows.push_back(std::move(cells));
    }
    runs.push_back(std::move(r));
  }

  const std::string fp0 = runs[0].manifest.at("fingerprint");
  for (const auto& r : runs) {
    const std::string fp = r.manifest.at("fingerprint");
    if (fp != fp0) {
      throw DataError("runs are on different Hamiltonians: " + runs[0].name +
                      "=" + fp0 + " vs " + r.name + "=" + fp);
    }
  }

  std::size_t max_rows = 0;
  for (const auto& r : runs) max_rows = std::max(max_rows, r.rows.size());

  std::string out = "iteration,exact_energy";
  for (const auto& r : runs) {
    out += ",error_" + r.name + ",terms_" + r.name;
  }
  out += '\n';
  const double exact = runs[0].manifest.at("exact_energy").get<double>();
  for (std::size_t i = 0; i < max_rows; ++i) {
    out += std::to_string(i + 1) + ',' + csv_double(exact);
    for (const auto& r : runs) {
      if (i < r.rows.size()) {
        out += ',' + r.rows[i][2] + ',' + r.rows[i][4];
      } else {
        out += ",,";
      }
    }
    out += '\n';
  }
  return out;
}

MiReport mi_artifacts(const std::string& input, int electrons,
                      const std::string& from_run, std::uint32_t n_clusters,
                      const std::optional<std::vector<std::uint32_t>>& capacities,
                      std::uint64_t seed) {
  ProblemBundle bundle = load_any_input(input, electrons);
  StateVector state(1);
  if (from_run.empty()) {
    state = exact_ground_state(bundle.problem.hamiltonian, bundle.n_electrons)
                .state;
  } else {
    const json manifest = load_json(from_run + "/manifest.json");
    if (manifest.at("fingerprint").get<std::string>() != bundle.fingerprint) {
      throw DataError("run was produced from a different problem");
    }
    const std::string kind = manifest.at("config").at("engine");
    if (kind == "iqcc") {
      throw DataError("iqcc runs carry no circuit state to take MI from");
    }
    std::vector<AnsatzElement> elements;
    for (const auto& e : manifest.at("elements")) {
      AnsatzElement el;
      el.generator = PauliWord::from_letters(e.at("generator"));
      el.angle = e.at("angle").get<double>();
      el.selected_at = e.at("selected_at").get<int>();
      const std::string p = e.at("placement");
      el.placement = p == "cross" ? Placement::CrossCluster
                     : p.rfind("intra", 0) == 0 ? Placement::IntraCluster
                                                : Placement::Monolithic;
      el.cluster = e.at("cluster").get<int>();
      elements.push_back(el);
    }
    state = full_register_state(bundle.problem.hamiltonian.n_qubits(),
                                bundle.problem.reference_mask, elements);
  }

  MiReport report;
  report.mi = mutual_information(state);

  std::vector<std::pair<std::string, PartitionMethod>> methods = {
      {"refine", PartitionMethod::Refine},
      {"qubo-mi", PartitionMethod::QuboMiSelection},
      {"qubo-modularity", PartitionMethod::QuboModularity},
  };
  if (report.mi.n <= 16 || n_clusters != 2) {
    methods.insert(methods.begin(),
                   {"exhaustive", PartitionMethod::Exhaustive});
  }
  for (const auto& [name, method] : methods) {
    Clustering c =
        compute_clustering(report.mi, n_clusters, capacities, method, seed);
    report.objectives.emplace_back(name, intercluster_mi(report.mi, c));
    report.clusterings.emplace_back(name, std::move(c));
  }
  return report;
}

void write_mi_report(const MiReport& report, const std::string& dir) {
  fs::create_directories(dir);
  write_file(dir + "/mi.csv", report.mi.to_csv());
  for (const auto& [name, clustering] : report.clusterings) {
    write_file(dir + "/clustering_" + name + ".json",
               clustering.to_json() + "\n");
  }
  std::string obj = "method,intercluster_mi\n";
  for (const auto& [name, value] : report.objectives) {
    obj += name + ',' + csv_double(value) + '\n';
  }
  write_file(dir + "/objectives.csv", obj);
}

}  // namespace cvqe
