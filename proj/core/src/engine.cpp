#include "cvqe/engine.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <set>
#include <stdexcept>

namespace cvqe {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::uint64_t gather_submask(std::uint64_t mask,
                             const std::vector<std::uint32_t>& qubits) {
  std::uint64_t sub = 0;
  for (std::size_t t = 0; t < qubits.size(); ++t) {
    sub |= ((mask >> qubits[t]) & 1) << t;
  }
  return sub;
}

std::uint64_t mask_of(const std::vector<std::uint32_t>& qubits) {
  std::uint64_t m = 0;
  for (auto q : qubits) m |= std::uint64_t{1} << q;
  return m;
}

}  // namespace

ClusteredState::ClusteredState(const Clustering& clustering,
                               std::uint64_t reference_mask) {
  for (std::uint32_t c = 0; c < clustering.n_clusters; ++c) {
    qubits_.push_back(clustering.cluster_qubits(c));
    const auto& qs = qubits_.back();
    if (qs.empty()) throw std::invalid_argument("empty cluster");
    states_.push_back(StateVector::basis_state(
        static_cast<std::uint32_t>(qs.size()),
        gather_submask(reference_mask, qs)));
  }
}

void ClusteredState::apply_intra_rotation(std::uint32_t c,
                                          const PauliWord& full_word,
                                          double angle) {
  const std::uint64_t cmask = mask_of(qubits_[c]);
  if ((full_word.support() & ~cmask) != 0) {
    throw std::invalid_argument(
        "cross-cluster generator placed in a cluster circuit");
  }
  states_[c].apply_rotation(restrict_to_cluster(full_word, qubits_[c]), angle);
}

Complex ClusteredState::expect_word(const PauliWord& full_word) const {
  Complex prod(1, 0);
  for (std::size_t c = 0; c < states_.size(); ++c) {
    prod *= states_[c].expectation(restrict_to_cluster(full_word, qubits_[c]));
  }
  return prod;
}

Complex ClusteredState::expect_sum_complex(const PauliSum& s) const {
  Complex acc(0, 0);
  for (const auto& [w, c] : s) acc += c * expect_word(w);
  return acc;
}

double ClusteredState::expect_sum(const PauliSum& s) const {
  const Complex v = expect_sum_complex(s);
  if (std::abs(v.imag()) > kCoeffTol * std::max(1.0, std::abs(v.real()))) {
    throw std::runtime_error("clustered expectation came out complex");
  }
  return v.real();
}

std::size_t select_entangler(std::span<const double> gradients) {
  if (gradients.empty()) throw std::invalid_argument("empty gradient vector");
  std::size_t best = 0;
  double best_mag = std::abs(gradients[0]);
  for (std::size_t k = 1; k < gradients.size(); ++k) {
    const double mag = std::abs(gradients[k]);
    if (mag > best_mag) {
      best_mag = mag;
      best = k;
    }
  }
  return best;
}

namespace {

template <typename ExpectFn>
std::vector<double> pool_gradients_impl(const PauliSum& h_eff,
                                        const OperatorPool& pool,
                                        ExpectFn&& expect) {
  std::vector<double> out(pool.size());
  for (std::size_t k = 0; k < pool.size(); ++k) {
    const PauliSum comm = commutator_with_word(h_eff, pool.generators[k]);
    const Complex v = expect(comm);
    // i<[H,P]> is real for Hermitian H; the residue is numerical noise.
    if (std::abs(v.real()) > 1e-8 * std::max(1.0, std::abs(v))) {
      throw std::runtime_error("pool gradient came out complex");
    }
    out[k] = -v.imag();
  }
  return out;
}

}  // namespace

std::vector<double> pool_gradients(const PauliSum& h_eff,
                                   const StateVector& psi,
                                   const OperatorPool& pool) {
  return pool_gradients_impl(h_eff, pool, [&](const PauliSum& s) {
    return expectation_complex(psi, s);
  });
}

std::vector<double> pool_gradients(const PauliSum& h_eff,
                                   const ClusteredState& psi,
                                   const OperatorPool& pool) {
  return pool_gradients_impl(h_eff, pool, [&](const PauliSum& s) {
    return psi.expect_sum_complex(s);
  });
}

PauliSum dress_hamiltonian(
    const PauliSum& h, std::span<const std::pair<PauliWord, double>> dressers,
    double tol) {
  PauliSum cur = h;
  for (std::size_t k = dressers.size(); k-- > 0;) {
    cur = conjugate_by_rotation(cur, dressers[k].first, dressers[k].second, tol);
  }
  return cur;
}

DressedBundle dress_with_derivatives(
    const PauliSum& h, std::span<const std::pair<PauliWord, double>> dressers,
    double tol) {
  DressedBundle b;
  b.h_d = h;
  b.derivatives.resize(dressers.size());
  for (std::size_t k = dressers.size(); k-- > 0;) {
    const auto& [word, angle] = dressers[k];
    // d/d theta_k of one conjugation pass is the conjugated commutator
    // i U^dag [H', P_k] U, then the outer passes apply to it as well.
    b.derivatives[k] = commutator_with_word(b.h_d, word) * Complex(0, 1);
    b.h_d = conjugate_by_rotation(b.h_d, word, angle, tol);
    for (std::size_t j = k; j < dressers.size(); ++j) {
      b.derivatives[j] =
          conjugate_by_rotation(b.derivatives[j], word, angle, tol);
    }
  }
  return b;
}

double clustered_energy(const PauliSum& h_d, const Clustering& clustering,
                        std::span<const AnsatzElement> circuit_elements,
                        std::uint64_t reference_mask) {
  ClusteredState cs(clustering, reference_mask);
  for (const auto& e : circuit_elements) {
    if (e.placement != Placement::IntraCluster || e.cluster < 0) {
      throw std::invalid_argument(
          "clustered_energy takes IntraCluster elements only");
    }
    cs.apply_intra_rotation(static_cast<std::uint32_t>(e.cluster), e.generator,
                            e.angle);
  }
  return cs.expect_sum(h_d);
}

double circuit_energy_and_gradient(const StateVector& reference,
                                   std::span<const PauliWord> words,
                                   std::span<const double> angles,
                                   const PauliSum& h,
                                   std::span<double> gradients) {
  if (words.size() != angles.size() || gradients.size() != words.size()) {
    throw std::invalid_argument("circuit gradient size mismatch");
  }
  StateVector psi = reference;
  for (std::size_t t = 0; t < words.size(); ++t) {
    psi.apply_rotation(words[t], angles[t]);
  }
  const double energy = expectation_complex(psi, h).real();

  // Reverse sweep: maintain k = U_t...U_1|ref> and b = U_{t+1}^dag...U_M^dag H|psi>.
  StateVector b = apply_sum(h, psi);
  StateVector k = psi;
  for (std::size_t t = words.size(); t-- > 0;) {
    StateVector pk = k;
    pk.apply_word(words[t]);
    gradients[t] = 2.0 * inner(pk, b).imag();
    k.apply_rotation(words[t], -angles[t]);
    b.apply_rotation(words[t], -angles[t]);
  }
  return energy;
}

StateVector full_register_state(std::uint32_t n_qubits,
                                std::uint64_t reference_mask,
                                std::span<const AnsatzElement> elements) {
  StateVector psi = StateVector::basis_state(n_qubits, reference_mask);
  for (const auto& e : elements) {
    if (e.placement != Placement::CrossCluster) {
      psi.apply_rotation(e.generator, e.angle);
    }
  }
  for (const auto& e : elements) {
    if (e.placement == Placement::CrossCluster) {
      psi.apply_rotation(e.generator, e.angle);
    }
  }
  return psi;
}

double full_register_energy(const PauliSum& h, std::uint64_t reference_mask,
                            std::span<const AnsatzElement> elements) {
  const StateVector psi =
      full_register_state(h.n_qubits(), reference_mask, elements);
  return expectation_complex(psi, h).real();
}

MinimizeResult minimize_energy(const Objective& objective,
                               std::vector<double> x0,
                               const EngineConfig& config) {
  MinimizeOptions opts;
  opts.grad_tol = config.optimizer_grad_tol;
  opts.max_evaluations = config.optimizer_max_evaluations;
  return minimize(objective, std::move(x0), opts);
}

namespace {

struct StallTracker {
  std::int64_t last_index = -1;
  double last_gradient = 0;
  int repeats = 0;

  void observe(std::size_t index, double gmax,
               const PauliWord& word, std::vector<std::string>& warnings) {
    if (static_cast<std::int64_t>(index) == last_index &&
        std::abs(gmax - last_gradient) < 1e-12) {
      if (++repeats == 3) {
        warnings.push_back("stall: generator " + word.str() +
                           " selected 3 times with unchanged gradient");
      }
    } else {
      repeats = 1;
    }
    last_index = static_cast<std::int64_t>(index);
    last_gradient = gmax;
  }
};

void validate_problem(const Problem& prob) {
  if (prob.pool.size() == 0) {
    throw std::invalid_argument("operator pool is empty");
  }
  if (prob.pool.n_qubits != prob.hamiltonian.n_qubits()) {
    throw std::invalid_argument("pool/Hamiltonian size mismatch");
  }
  if (prob.reference_mask >> prob.hamiltonian.n_qubits()) {
    throw std::invalid_argument("reference mask exceeds register");
  }
  if (!prob.hamiltonian.is_hermitian()) {
    throw std::invalid_argument("Hamiltonian must be Hermitian");
  }
}

std::vector<PauliWord> element_words(std::span<const AnsatzElement> elements) {
  std::vector<PauliWord> words;
  words.reserve(elements.size());
  for (const auto& e : elements) words.push_back(e.generator);
  return words;
}

std::vector<double> element_angles(std::span<const AnsatzElement> elements) {
  std::vector<double> angles;
  angles.reserve(elements.size());
  for (const auto& e : elements) angles.push_back(e.angle);
  return angles;
}

EngineResult run_vqe(const EngineConfig& cfg, const Problem& prob) {
  const auto t0 = Clock::now();
  EngineResult out;
  out.clustering = Clustering::single_cluster(prob.hamiltonian.n_qubits());
  const StateVector ref = StateVector::basis_state(prob.hamiltonian.n_qubits(),
                                                   prob.reference_mask);

  for (std::size_t k = 0; k < prob.pool.size(); ++k) {
    out.ansatz.push_back({prob.pool.generators[k], 0.0, 1,
                          Placement::Monolithic, -1});
  }
  const auto words = element_words(out.ansatz);

  Objective obj = [&](std::span<const double> x, std::span<double> g) {
    return circuit_energy_and_gradient(ref, words, x, prob.hamiltonian, g);
  };
  MinimizeResult res =
      minimize_energy(obj, std::vector<double>(words.size(), 0.0), cfg);
  for (std::size_t k = 0; k < words.size(); ++k) out.ansatz[k].angle = res.x[k];

  std::vector<double> grad(words.size());
  circuit_energy_and_gradient(ref, words, res.x, prob.hamiltonian, grad);
  double gmax = 0;
  for (double g : grad) gmax = std::max(gmax, std::abs(g));

  IterationRecord rec;
  rec.iteration = 1;
  rec.placement = Placement::Monolithic;
  rec.energy = res.f;
  rec.max_gradient = gmax;
  rec.term_count = prob.hamiltonian.term_count();
  rec.parameters = res.x;
  rec.wall_seconds = seconds_since(t0);
  out.records.push_back(std::move(rec));
  out.final_energy = res.f;
  out.converged = res.converged;
  return out;
}

EngineResult run_adapt(const EngineConfig& cfg, const Problem& prob) {
  EngineResult out;
  out.clustering = Clustering::single_cluster(prob.hamiltonian.n_qubits());
  const StateVector ref = StateVector::basis_state(prob.hamiltonian.n_qubits(),
                                                   prob.reference_mask);
  std::vector<AnsatzElement>& elements = out.ansatz;
  StallTracker stall;

  for (int it = 1; it <= cfg.max_iterations; ++it) {
    const auto t0 = Clock::now();
    StateVector psi = ref;
    for (const auto& e : elements) psi.apply_rotation(e.generator, e.angle);

    const auto grads = pool_gradients(prob.hamiltonian, psi, prob.pool);
    double gmax = 0;
    for (double g : grads) gmax = std::max(gmax, std::abs(g));
    if (gmax < cfg.epsilon) {
      out.converged = true;
      break;
    }
    const std::size_t k = select_entangler(grads);
    stall.observe(k, gmax, prob.pool.generators[k], out.warnings);

    elements.push_back(
        {prob.pool.generators[k], 0.0, it, Placement::Monolithic, -1});
    const auto words = element_words(elements);
    Objective obj = [&](std::span<const double> x, std::span<double> g) {
      return circuit_energy_and_gradient(ref, words, x, prob.hamiltonian, g);
    };
    MinimizeResult res = minimize_energy(obj, element_angles(elements), cfg);
    for (std::size_t t = 0; t < elements.size(); ++t) {
      elements[t].angle = res.x[t];
    }

    IterationRecord rec;
    rec.iteration = it;
    rec.selected = prob.pool.generators[k];
    rec.placement = Placement::Monolithic;
    rec.energy = res.f;
    rec.max_gradient = gmax;
    rec.term_count = prob.hamiltonian.term_count();
    rec.parameters = res.x;
    rec.wall_seconds = seconds_since(t0);
    out.records.push_back(std::move(rec));
  }

  out.final_energy = out.records.empty()
                         ? expectation(ref, prob.hamiltonian)
                         : out.records.back().energy;
  return out;
}

EngineResult run_iqcc(const EngineConfig& cfg, const Problem& prob) {
  EngineResult out;
  out.clustering = Clustering::single_cluster(prob.hamiltonian.n_qubits());
  const StateVector ref = StateVector::basis_state(prob.hamiltonian.n_qubits(),
                                                   prob.reference_mask);
  PauliSum h_cur = prob.hamiltonian;
  std::set<std::size_t> used;
  StallTracker stall;

  for (int it = 1; it <= cfg.max_iterations; ++it) {
    const auto t0 = Clock::now();
    auto grads = pool_gradients(h_cur, ref, prob.pool);
    if (cfg.iqcc_exclude_used) {
      for (auto idx : used) grads[idx] = 0.0;
    }
    double gmax = 0;
    for (double g : grads) gmax = std::max(gmax, std::abs(g));
    if (gmax < cfg.epsilon) {
      out.converged = true;
      break;
    }
    const std::size_t k = select_entangler(grads);
    stall.observe(k, gmax, prob.pool.generators[k], out.warnings);
    used.insert(k);

    const PauliWord word = prob.pool.generators[k];
    const std::vector<PauliWord> words{word};
    Objective obj = [&](std::span<const double> x, std::span<double> g) {
      return circuit_energy_and_gradient(ref, words, x, h_cur, g);
    };
    MinimizeResult res = minimize_energy(obj, {0.0}, cfg);

    h_cur = conjugate_by_rotation(h_cur, word, res.x[0],
                                  cfg.dressing_prune_tol);
    out.ansatz.push_back({word, res.x[0], it, Placement::Monolithic, -1});

    IterationRecord rec;
    rec.iteration = it;
    rec.selected = word;
    rec.placement = Placement::Monolithic;
    rec.energy = res.f;
    rec.max_gradient = gmax;
    rec.term_count = h_cur.term_count();
    rec.parameters = element_angles(out.ansatz);
    rec.wall_seconds = seconds_since(t0);
    out.records.push_back(std::move(rec));
  }

  out.final_energy = out.records.empty()
                         ? expectation(ref, prob.hamiltonian)
                         : out.records.back().energy;
  return out;
}

// ---- ClusterVQE ----

struct ClusterLayout {
  // Element indices per cluster circuit and the dressing list, both in
  // selection order.
  std::vector<std::vector<std::size_t>> circuits;
  std::vector<std::size_t> dressing;
};

ClusterLayout classify(const std::vector<AnsatzElement>& elements,
                       const Clustering& clustering) {
  ClusterLayout layout;
  layout.circuits.resize(clustering.n_clusters);
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (elements[i].placement == Placement::IntraCluster) {
      layout.circuits[elements[i].cluster].push_back(i);
    } else {
      layout.dressing.push_back(i);
    }
  }
  return layout;
}

void assign_placement(AnsatzElement& e, const Clustering& clustering) {
  const std::uint64_t support = e.generator.support();
  for (std::uint32_t c = 0; c < clustering.n_clusters; ++c) {
    if ((support & ~clustering.cluster_mask(c)) == 0) {
      e.placement = Placement::IntraCluster;
      e.cluster = static_cast<int>(c);
      return;
    }
  }
  e.placement = Placement::CrossCluster;
  e.cluster = -1;
}

PauliSum cluster_effective_operator(const PauliSum& h_d,
                                    const ClusteredState& cs,
                                    std::uint32_t c) {
  const auto& qs = cs.cluster_qubits(c);
  PauliSum out(static_cast<std::uint32_t>(qs.size()));
  for (const auto& [w, coeff] : h_d) {
    Complex scale = coeff;
    for (std::uint32_t j = 0; j < cs.n_clusters(); ++j) {
      if (j == c) continue;
      scale *= cs.state(j).expectation(
          restrict_to_cluster(w, cs.cluster_qubits(j)));
    }
    out.add(restrict_to_cluster(w, qs), scale);
  }
  return out;
}

Clustering initial_clustering(const EngineConfig& cfg, std::uint32_t n) {
  switch (cfg.clustering_mode) {
    case ClusteringMode::Fixed:
      if (!cfg.clustering) {
        throw std::invalid_argument("fixed clustering mode needs a clustering");
      }
      if (cfg.clustering->n_qubits() != n) {
        throw std::invalid_argument("clustering size mismatch");
      }
      if (!cfg.clustering->feasible(cfg.capacities)) {
        throw std::invalid_argument("infeasible clustering");
      }
      return *cfg.clustering;
    case ClusteringMode::SpinFallback:
      if (cfg.n_clusters != 2 || n % 2 != 0) {
        throw std::invalid_argument("spin grouping needs M=2 and even n");
      }
      return Clustering::spin_halves(n);
    case ClusteringMode::OnTheFly: {
      if (cfg.n_clusters == 2 && n % 2 == 0) return Clustering::spin_halves(n);
      // No MI yet: contiguous blocks until the first re-clustering.
      std::vector<std::uint32_t> assign(n);
      for (std::uint32_t q = 0; q < n; ++q) {
        assign[q] = std::min(cfg.n_clusters - 1, q / (n / cfg.n_clusters));
      }
      return Clustering(std::move(assign), cfg.n_clusters);
    }
  }
  throw std::logic_error("unknown clustering mode");
}

EngineResult run_cluster_vqe(const EngineConfig& cfg, const Problem& prob) {
  const std::uint32_t n = prob.hamiltonian.n_qubits();
  EngineResult out;
  Clustering clustering = initial_clustering(cfg, n);
  std::vector<AnsatzElement>& elements = out.ansatz;
  StallTracker stall;

  auto dresser_list = [&](const ClusterLayout& layout) {
    std::vector<std::pair<PauliWord, double>> list;
    for (auto i : layout.dressing) {
      list.emplace_back(elements[i].generator, elements[i].angle);
    }
    return list;
  };

  auto build_state = [&](const ClusterLayout& layout) {
    ClusteredState cs(clustering, prob.reference_mask);
    for (std::uint32_t c = 0; c < clustering.n_clusters; ++c) {
      for (auto i : layout.circuits[c]) {
        cs.apply_intra_rotation(c, elements[i].generator, elements[i].angle);
      }
    }
    return cs;
  };

  for (int it = 1; it <= cfg.max_iterations; ++it) {
    const auto t0 = Clock::now();
    ClusterLayout layout = classify(elements, clustering);
    DressedBundle bundle = dress_with_derivatives(
        prob.hamiltonian, dresser_list(layout), cfg.dressing_prune_tol);
    ClusteredState cs = build_state(layout);

    const auto grads = pool_gradients(bundle.h_d, cs, prob.pool);
    double gmax = 0;
    for (double g : grads) gmax = std::max(gmax, std::abs(g));
    if (gmax < cfg.epsilon) {
      out.converged = true;
      break;
    }
    const std::size_t sel = select_entangler(grads);
    stall.observe(sel, gmax, prob.pool.generators[sel], out.warnings);

    AnsatzElement elem{prob.pool.generators[sel], 0.0, it,
                       Placement::Monolithic, -1};
    assign_placement(elem, clustering);
    elements.push_back(elem);
    layout = classify(elements, clustering);

    // Live parameters: everything, unless cross angles are frozen (then
    // only the current iteration's cross element stays live).
    std::vector<std::size_t> live;
    for (std::size_t i = 0; i < elements.size(); ++i) {
      const bool frozen = cfg.freeze_cross_angles &&
                          elements[i].placement == Placement::CrossCluster &&
                          elements[i].selected_at < it;
      if (!frozen) live.push_back(i);
    }

    Objective obj = [&](std::span<const double> x, std::span<double> g) {
      for (std::size_t t = 0; t < live.size(); ++t) {
        elements[live[t]].angle = x[t];
      }
      DressedBundle b = dress_with_derivatives(
          prob.hamiltonian, dresser_list(layout), cfg.dressing_prune_tol);
      ClusteredState state = build_state(layout);
      const double energy = state.expect_sum(b.h_d);

      std::vector<double> full(elements.size(), 0.0);
      for (std::uint32_t c = 0; c < clustering.n_clusters; ++c) {
        const auto& circuit = layout.circuits[c];
        if (circuit.empty()) continue;
        const auto& qs = state.cluster_qubits(c);
        std::vector<PauliWord> words;
        std::vector<double> angles;
        for (auto i : circuit) {
          words.push_back(restrict_to_cluster(elements[i].generator, qs));
          angles.push_back(elements[i].angle);
        }
        const StateVector sub_ref = StateVector::basis_state(
            static_cast<std::uint32_t>(qs.size()),
            gather_submask(prob.reference_mask, qs));
        const PauliSum h_c = cluster_effective_operator(b.h_d, state, c);
        std::vector<double> sub_grad(words.size());
        circuit_energy_and_gradient(sub_ref, words, angles, h_c, sub_grad);
        for (std::size_t t = 0; t < circuit.size(); ++t) {
          full[circuit[t]] = sub_grad[t];
        }
      }
      for (std::size_t k = 0; k < layout.dressing.size(); ++k) {
        full[layout.dressing[k]] = state.expect_sum(b.derivatives[k]);
      }
      for (std::size_t t = 0; t < live.size(); ++t) g[t] = full[live[t]];
      return energy;
    };

    std::vector<double> x0;
    for (auto i : live) x0.push_back(elements[i].angle);
    MinimizeResult res = minimize_energy(obj, std::move(x0), cfg);
    for (std::size_t t = 0; t < live.size(); ++t) {
      elements[live[t]].angle = res.x[t];
    }

    const PauliSum h_final = dress_hamiltonian(
        prob.hamiltonian, dresser_list(layout), cfg.dressing_prune_tol);

    IterationRecord rec;
    rec.iteration = it;
    rec.selected = prob.pool.generators[sel];
    rec.placement = elem.placement;
    rec.cluster = elem.cluster;
    rec.energy = res.f;
    rec.max_gradient = gmax;
    rec.term_count = h_final.term_count();
    rec.parameters = element_angles(elements);
    rec.wall_seconds = seconds_since(t0);
    out.records.push_back(std::move(rec));

    if (cfg.clustering_mode == ClusteringMode::OnTheFly) {
      const StateVector psi =
          full_register_state(n, prob.reference_mask, elements);
      const MIMatrix mi = mutual_information(psi);
      Clustering next = compute_clustering(mi, cfg.n_clusters, cfg.capacities,
                                           cfg.on_the_fly_method, cfg.seed);
      if (next.assignment != clustering.assignment) {
        clustering = next;
        // Re-classify with angles kept; intra elements whose support now
        // spans clusters migrate to the dressing list and vice versa.
        for (auto& e : elements) assign_placement(e, clustering);
      }
    }
  }

  if (out.records.empty()) {
    ClusterLayout layout = classify(elements, clustering);
    ClusteredState cs = build_state(layout);
    out.final_energy = cs.expect_sum(prob.hamiltonian);
  } else {
    out.final_energy = out.records.back().energy;
  }
  out.clustering = clustering;
  return out;
}

}  // namespace

EngineResult run_engine(const EngineConfig& cfg, const Problem& prob) {
  validate_problem(prob);
  if (cfg.epsilon <= 0 || cfg.max_iterations < 1) {
    throw std::invalid_argument("bad convergence configuration");
  }
  switch (cfg.kind) {
    case EngineKind::Vqe:
      return run_vqe(cfg, prob);
    case EngineKind::AdaptVqe:
      return run_adapt(cfg, prob);
    case EngineKind::Iqcc:
      return run_iqcc(cfg, prob);
    case EngineKind::ClusterVqe:
      return run_cluster_vqe(cfg, prob);
  }
  throw std::logic_error("unknown engine kind");
}

std::string engine_kind_name(EngineKind k) {
  switch (k) {
    case EngineKind::Vqe:
      return "vqe";
    case EngineKind::AdaptVqe:
      return "adapt";
    case EngineKind::Iqcc:
      return "iqcc";
    case EngineKind::ClusterVqe:
      return "cluster";
  }
  return "?";
}

EngineKind engine_kind_from_name(const std::string& name) {
  if (name == "vqe") return EngineKind::Vqe;
  if (name == "adapt") return EngineKind::AdaptVqe;
  if (name == "iqcc") return EngineKind::Iqcc;
  if (name == "cluster") return EngineKind::ClusterVqe;
  throw std::invalid_argument("unknown engine '" + name + "'");
}

std::string placement_name(EngineKind kind, Placement p, int cluster) {
  if (kind == EngineKind::Iqcc) return "dressed";
  switch (p) {
    case Placement::Monolithic:
      return "monolithic";
    case Placement::IntraCluster:
      return "intra:" + std::to_string(cluster);
    case Placement::CrossCluster:
      return "cross";
  }
  return "?";
}

}  // namespace cvqe
