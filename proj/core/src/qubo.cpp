#include "cvqe/qubo.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

namespace cvqe {

double QuboProblem::energy(std::uint64_t bits) const {
  const std::uint32_t n = size();
  double e = 0;
  for (std::uint32_t i = 0; i < n; ++i) {
    if (!((bits >> i) & 1)) continue;
    e += q(i, i);
    for (std::uint32_t j = 0; j < n; ++j) {
      if (j != i && ((bits >> j) & 1)) e += q(i, j);
    }
  }
  return e;
}

QuboProblem build_mi_selection_qubo(const MIMatrix& mi, double target_fraction,
                                    double lambda) {
  if (target_fraction <= 0 || target_fraction >= 1) {
    throw std::invalid_argument("target fraction must lie in (0, 1)");
  }
  if (lambda <= 0) throw std::invalid_argument("lambda must be positive");
  const std::uint32_t n = mi.n;
  const double pool_size = static_cast<double>(n);
  QuboProblem out;
  out.q = Eigen::MatrixXd::Zero(n, n);
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = 0; j < n; ++j) {
      const double r =
          (i == j) ? 1.0 - 2.0 * target_fraction * pool_size : 1.0;
      out.q(i, j) = -mi.values(i, j) + lambda * r;
    }
  }
  return out;
}

QuboProblem build_modularity_qubo(const MIMatrix& mi) {
  const std::uint32_t n = mi.n;
  Eigen::MatrixXd a = mi.values.cwiseAbs();
  a.diagonal().setZero();
  const Eigen::VectorXd degree = a.rowwise().sum();
  const double two_m = degree.sum();
  if (two_m <= 0) {
    throw std::invalid_argument("modularity needs a nonzero MI matrix");
  }
  QuboProblem out;
  out.q = -(a - (degree * degree.transpose()) / two_m);
  return out;
}

std::uint64_t solve_qubo_exhaustive(const QuboProblem& q) {
  const std::uint32_t n = q.size();
  if (n == 0 || n > 22) {
    throw std::invalid_argument("exhaustive QUBO guard: 1..22 variables");
  }
  double best = std::numeric_limits<double>::infinity();
  std::uint64_t best_bits = 0;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    const double e = q.energy(bits);
    if (e < best) {
      best = e;
      best_bits = bits;
    }
  }
  return best_bits;
}

std::uint64_t solve_qubo_annealing(const QuboProblem& q,
                                   const AnnealOptions& opts) {
  const std::uint32_t n = q.size();
  if (n == 0 || n > 63) throw std::invalid_argument("annealer supports 1..63");
  std::mt19937_64 rng(opts.seed);
  std::uniform_real_distribution<double> uniform(0.0, 1.0);

  std::uint64_t state = 0;
  for (std::uint32_t i = 0; i < n; ++i) {
    if (uniform(rng) < 0.5) state |= std::uint64_t{1} << i;
  }
  double energy = q.energy(state);
  double best = energy;
  std::uint64_t best_bits = state;

  // Flip-cost of bit k: s * (Q_kk + sum_{j != k} (Q_kj + Q_jk) x_j) with
  // s = +1 when setting the bit and -1 when clearing it.
  auto flip_delta = [&](std::uint32_t k) {
    double acc = q.q(k, k);
    for (std::uint32_t j = 0; j < n; ++j) {
      if (j != k && ((state >> j) & 1)) acc += q.q(k, j) + q.q(j, k);
    }
    return ((state >> k) & 1) ? -acc : acc;
  };

  double temperature = q.q.cwiseAbs().maxCoeff() * n;
  if (temperature <= 0) temperature = 1.0;
  const long total_sweeps = static_cast<long>(opts.sweeps_per_site) * n;

  for (long sweep = 0; sweep < total_sweeps; ++sweep) {
    for (std::uint32_t k = 0; k < n; ++k) {
      const double delta = flip_delta(k);
      if (delta <= 0 || uniform(rng) < std::exp(-delta / temperature)) {
        state ^= std::uint64_t{1} << k;
        energy += delta;
        if (energy < best) {
          best = energy;
          best_bits = state;
        }
      }
    }
    temperature *= opts.cooling;
  }
  return best_bits;
}

Clustering bipartition_from_bits(std::uint64_t bits, std::uint32_t n) {
  std::vector<std::uint32_t> assign(n);
  for (std::uint32_t q = 0; q < n; ++q) assign[q] = (bits >> q) & 1;
  // Degenerate selections (all or none) collapse to one cluster.
  const std::uint32_t m =
      (bits == 0 || bits == ((n == 64 ? ~0ull : (std::uint64_t{1} << n) - 1)))
          ? 1
          : 2;
  if (m == 1) assign.assign(n, 0);
  return Clustering(std::move(assign), m).canonicalized();
}

namespace {

Clustering refine_seed_blocks(
    const MIMatrix& mi, std::uint32_t m,
    const std::optional<std::vector<std::uint32_t>>& capacities) {
  // Contiguous blocks sized by the capacities (or near-equal split).
  std::vector<std::uint32_t> block(m, mi.n / m);
  for (std::uint32_t c = 0; c < mi.n % m; ++c) ++block[c];
  if (capacities) {
    std::uint32_t total = 0;
    for (auto cap : *capacities) total += cap;
    if (total < mi.n) throw std::invalid_argument("capacities too small");
    block = *capacities;
    // Shrink blocks to exactly n qubits, largest first.
    std::uint32_t excess = total - mi.n;
    while (excess > 0) {
      auto it = std::max_element(block.begin(), block.end());
      if (*it <= 1) break;
      --*it;
      --excess;
    }
  }
  std::vector<std::uint32_t> assign;
  for (std::uint32_t c = 0; c < m; ++c) {
    for (std::uint32_t k = 0; k < block[c] && assign.size() < mi.n; ++k) {
      assign.push_back(c);
    }
  }
  while (assign.size() < mi.n) assign.push_back(m - 1);
  return Clustering(std::move(assign), m);
}

MIMatrix submatrix(const MIMatrix& mi, const std::vector<std::uint32_t>& qs) {
  MIMatrix out;
  out.n = static_cast<std::uint32_t>(qs.size());
  out.values = Eigen::MatrixXd::Zero(out.n, out.n);
  for (std::uint32_t i = 0; i < out.n; ++i) {
    for (std::uint32_t j = 0; j < out.n; ++j) {
      out.values(i, j) = mi.values(qs[i], qs[j]);
    }
  }
  return out;
}

Clustering qubo_bipartition(const MIMatrix& mi, PartitionMethod method,
                            std::uint64_t seed) {
  QuboProblem q = method == PartitionMethod::QuboMiSelection
                      ? build_mi_selection_qubo(mi, 0.5, 2.0)
                      : build_modularity_qubo(mi);
  std::uint64_t bits;
  if (mi.n <= 22) {
    bits = solve_qubo_exhaustive(q);
  } else {
    bits = solve_qubo_annealing(q, {.seed = seed});
  }
  return bipartition_from_bits(bits, mi.n);
}

// Move qubits out of over-capacity clusters, cheapest objective increase
// first, so QUBO outputs honor capacity constraints too.
Clustering repair_capacities(const MIMatrix& mi, Clustering c,
                             const std::vector<std::uint32_t>& capacities) {
  if (capacities.size() != c.n_clusters) {
    throw std::invalid_argument("capacity list size mismatch");
  }
  for (;;) {
    auto sizes = c.sizes();
    std::int64_t over = -1;
    for (std::uint32_t k = 0; k < c.n_clusters; ++k) {
      if (sizes[k] > capacities[k]) {
        over = k;
        break;
      }
    }
    if (over < 0) return c;
    double best_obj = std::numeric_limits<double>::infinity();
    Clustering best = c;
    for (std::uint32_t q = 0; q < c.n_qubits(); ++q) {
      if (c.assignment[q] != static_cast<std::uint32_t>(over)) continue;
      for (std::uint32_t to = 0; to < c.n_clusters; ++to) {
        if (to == static_cast<std::uint32_t>(over)) continue;
        if (sizes[to] >= capacities[to]) continue;
        Clustering cand = c;
        cand.assignment[q] = to;
        const double v = intercluster_mi(mi, cand);
        if (v < best_obj) {
          best_obj = v;
          best = cand;
        }
      }
    }
    if (best == c) {
      throw std::runtime_error("cannot repair clustering to capacities");
    }
    c = best;
  }
}

}  // namespace

Clustering compute_clustering(
    const MIMatrix& mi, std::uint32_t m,
    const std::optional<std::vector<std::uint32_t>>& capacities,
    PartitionMethod method, std::uint64_t seed) {
  if (m == 1) return Clustering::single_cluster(mi.n);
  switch (method) {
    case PartitionMethod::Exhaustive:
      return exhaustive_partition(mi, m, capacities);
    case PartitionMethod::Refine:
      return refine_partition(mi, m, capacities,
                              refine_seed_blocks(mi, m, capacities));
    case PartitionMethod::QuboMiSelection:
    case PartitionMethod::QuboModularity: {
      if (m == 2) {
        Clustering c = qubo_bipartition(mi, method, seed);
        if (c.n_clusters == 1) {
          // Degenerate QUBO output; fall back to a balanced refinement.
          return refine_partition(mi, m, capacities,
                                  refine_seed_blocks(mi, m, capacities));
        }
        if (capacities) c = repair_capacities(mi, c, *capacities).canonicalized();
        return c;
      }
      // Recursive bipartition for M > 2 (M must be even per level).
      if (m % 2 != 0) {
        throw std::invalid_argument(
            "QUBO clustering supports M = 2 or even M via recursion");
      }
      Clustering top = qubo_bipartition(mi, method, seed);
      if (top.n_clusters == 1) {
        return refine_partition(mi, m, capacities,
                                refine_seed_blocks(mi, m, capacities));
      }
      std::vector<std::uint32_t> assign(mi.n, 0);
      std::uint32_t next_id = 0;
      for (std::uint32_t side = 0; side < 2; ++side) {
        const auto qs = top.cluster_qubits(side);
        Clustering sub = compute_clustering(submatrix(mi, qs), m / 2, {},
                                            method, seed + side + 1);
        for (std::uint32_t t = 0; t < qs.size(); ++t) {
          assign[qs[t]] = next_id + sub.assignment[t];
        }
        next_id += sub.n_clusters;
      }
      return Clustering(std::move(assign), next_id).canonicalized();
    }
  }
  throw std::logic_error("unknown partition method");
}

std::string partition_method_name(PartitionMethod m) {
  switch (m) {
    case PartitionMethod::Exhaustive:
      return "exhaustive";
    case PartitionMethod::Refine:
      return "refine";
    case PartitionMethod::QuboMiSelection:
      return "qubo-mi";
    case PartitionMethod::QuboModularity:
      return "qubo-modularity";
  }
  return "?";
}

PartitionMethod partition_method_from_name(const std::string& name) {
  if (name == "exhaustive") return PartitionMethod::Exhaustive;
  if (name == "refine") return PartitionMethod::Refine;
  if (name == "qubo-mi") return PartitionMethod::QuboMiSelection;
  if (name == "qubo-modularity") return PartitionMethod::QuboModularity;
  throw std::invalid_argument("unknown partition method '" + name + "'");
}

}  // namespace cvqe
