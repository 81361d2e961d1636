#include "cvqe/partition.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <stdexcept>

namespace cvqe {

Clustering::Clustering(std::vector<std::uint32_t> assign, std::uint32_t m)
    : assignment(std::move(assign)), n_clusters(m) {
  if (assignment.empty() || m == 0) {
    throw std::invalid_argument("clustering needs qubits and clusters");
  }
  for (auto c : assignment) {
    if (c >= m) throw std::invalid_argument("cluster id out of range");
  }
}

Clustering Clustering::single_cluster(std::uint32_t n) {
  return Clustering(std::vector<std::uint32_t>(n, 0), 1);
}

Clustering Clustering::spin_halves(std::uint32_t n) {
  if (n % 2 != 0) throw std::invalid_argument("spin grouping needs even size");
  std::vector<std::uint32_t> a(n, 0);
  for (std::uint32_t q = n / 2; q < n; ++q) a[q] = 1;
  return Clustering(std::move(a), 2);
}

std::vector<std::uint32_t> Clustering::cluster_qubits(std::uint32_t c) const {
  std::vector<std::uint32_t> out;
  for (std::uint32_t q = 0; q < assignment.size(); ++q) {
    if (assignment[q] == c) out.push_back(q);
  }
  return out;
}

std::vector<std::uint32_t> Clustering::sizes() const {
  std::vector<std::uint32_t> s(n_clusters, 0);
  for (auto c : assignment) ++s[c];
  return s;
}

std::uint64_t Clustering::cluster_mask(std::uint32_t c) const {
  std::uint64_t mask = 0;
  for (std::uint32_t q = 0; q < assignment.size(); ++q) {
    if (assignment[q] == c) mask |= std::uint64_t{1} << q;
  }
  return mask;
}

bool Clustering::feasible(
    const std::optional<std::vector<std::uint32_t>>& capacities) const {
  const auto s = sizes();
  for (auto count : s) {
    if (count == 0) return false;
  }
  if (capacities) {
    if (capacities->size() != n_clusters) return false;
    for (std::uint32_t c = 0; c < n_clusters; ++c) {
      if (s[c] > (*capacities)[c]) return false;
    }
  }
  return true;
}

Clustering Clustering::canonicalized() const {
  std::vector<std::int64_t> relabel(n_clusters, -1);
  std::uint32_t next = 0;
  std::vector<std::uint32_t> out(assignment.size());
  for (std::size_t q = 0; q < assignment.size(); ++q) {
    if (relabel[assignment[q]] < 0) relabel[assignment[q]] = next++;
    out[q] = static_cast<std::uint32_t>(relabel[assignment[q]]);
  }
  return Clustering(std::move(out), n_clusters);
}

std::string Clustering::to_json() const {
  nlohmann::json j = assignment;
  return j.dump();
}

Clustering Clustering::from_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  std::vector<std::uint32_t> assign = j.get<std::vector<std::uint32_t>>();
  const std::uint32_t m =
      assign.empty() ? 0 : *std::max_element(assign.begin(), assign.end()) + 1;
  return Clustering(std::move(assign), m);
}

Clustering Clustering::from_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open clustering file: " + path);
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  return from_json(text);
}

double intercluster_mi(const MIMatrix& mi, const Clustering& c) {
  if (mi.n != c.n_qubits()) {
    throw std::invalid_argument("MI/clustering size mismatch");
  }
  double total = 0;
  for (std::uint32_t i = 0; i < mi.n; ++i) {
    for (std::uint32_t j = i + 1; j < mi.n; ++j) {
      if (c.assignment[i] != c.assignment[j]) total += mi.values(i, j);
    }
  }
  return total;
}

namespace {

// Enumerate canonical assignments in lexicographic order: qubit 0 is
// always cluster 0 and each new cluster id appears only after all smaller
// ids. The first strictly better objective wins, which implements the
// smallest-canonical-assignment tie-break.
void enumerate_assignments(
    const MIMatrix& mi, std::uint32_t m,
    const std::optional<std::vector<std::uint32_t>>& capacities,
    std::vector<std::uint32_t>& current, std::uint32_t used,
    std::vector<std::uint32_t>& counts, double& best,
    std::vector<std::uint32_t>& best_assign) {
  const std::uint32_t n = mi.n;
  const std::size_t q = current.size();
  if (q == n) {
    if (used != m) return;
    Clustering cand(current, m);
    const double obj = intercluster_mi(mi, cand);
    if (obj < best) {
      best = obj;
      best_assign = current;
    }
    return;
  }
  const std::uint32_t limit = std::min(m - 1, used);
  for (std::uint32_t c = 0; c <= limit; ++c) {
    if (capacities && counts[c] >= (*capacities)[c]) continue;
    // Not enough qubits left to populate every remaining cluster.
    const std::uint32_t new_used = std::max(used, c + 1);
    if (m - new_used > n - q - 1) continue;
    current.push_back(c);
    ++counts[c];
    enumerate_assignments(mi, m, capacities, current, new_used, counts, best,
                          best_assign);
    --counts[c];
    current.pop_back();
  }
}

}  // namespace

Clustering exhaustive_partition(
    const MIMatrix& mi, std::uint32_t m,
    const std::optional<std::vector<std::uint32_t>>& capacities) {
  if (m == 0 || m > mi.n) throw std::invalid_argument("bad cluster count");
  if (m == 2 && mi.n > 16) {
    throw std::invalid_argument("exhaustive bipartition guard: > 16 qubits");
  }
  if (m > 2 && std::pow(static_cast<double>(m), mi.n) > 4e6) {
    throw std::invalid_argument("exhaustive partition too large");
  }
  if (capacities && capacities->size() != m) {
    throw std::invalid_argument("capacity list size mismatch");
  }

  std::vector<std::uint32_t> current, best_assign;
  std::vector<std::uint32_t> counts(m, 0);
  double best = std::numeric_limits<double>::infinity();
  enumerate_assignments(mi, m, capacities, current, 0, counts, best,
                        best_assign);
  if (best_assign.empty()) {
    throw std::runtime_error("no feasible clustering under the capacities");
  }
  return Clustering(std::move(best_assign), m);
}

Clustering refine_partition(
    const MIMatrix& mi, std::uint32_t m,
    const std::optional<std::vector<std::uint32_t>>& capacities,
    const Clustering& seed) {
  if (seed.n_qubits() != mi.n || seed.n_clusters != m) {
    throw std::invalid_argument("seed clustering does not match problem");
  }
  if (!seed.feasible(capacities)) {
    throw std::invalid_argument("seed clustering infeasible");
  }

  Clustering cur = seed;
  double obj = intercluster_mi(mi, cur);
  constexpr double kImprove = 1e-15;

  bool improved = true;
  while (improved) {
    improved = false;
    double best_obj = obj;
    Clustering best = cur;

    auto sizes = cur.sizes();
    // Single-qubit moves in (qubit, target) order.
    for (std::uint32_t q = 0; q < mi.n; ++q) {
      const std::uint32_t from = cur.assignment[q];
      if (sizes[from] == 1) continue;  // would empty a cluster
      for (std::uint32_t to = 0; to < m; ++to) {
        if (to == from) continue;
        if (capacities && sizes[to] >= (*capacities)[to]) continue;
        Clustering cand = cur;
        cand.assignment[q] = to;
        const double v = intercluster_mi(mi, cand);
        if (v < best_obj - kImprove) {
          best_obj = v;
          best = cand;
        }
      }
    }
    // Pair swaps in (q1, q2) order.
    for (std::uint32_t q1 = 0; q1 < mi.n; ++q1) {
      for (std::uint32_t q2 = q1 + 1; q2 < mi.n; ++q2) {
        if (cur.assignment[q1] == cur.assignment[q2]) continue;
        Clustering cand = cur;
        std::swap(cand.assignment[q1], cand.assignment[q2]);
        const double v = intercluster_mi(mi, cand);
        if (v < best_obj - kImprove) {
          best_obj = v;
          best = cand;
        }
      }
    }

    if (best_obj < obj - kImprove) {
      cur = best;
      obj = best_obj;
      improved = true;
    }
  }
  return cur.canonicalized();
}

}  // namespace cvqe
