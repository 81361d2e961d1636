#include "cvqe/pool.hpp"

#include <map>
#include <optional>
#include <stdexcept>

namespace cvqe {

namespace {

// Lexicographically smallest odd-Y word of the JW image of t - t^dag.
std::optional<PauliWord> representative_word(const FermionOperator& gen) {
  PauliSum image = jordan_wigner(gen);
  std::optional<PauliWord> best;
  for (const auto& [w, c] : image) {
    if (w.y_count() % 2 == 0) continue;
    if (!best || letter_lex_less(w, *best)) best = w;
  }
  return best;
}

}  // namespace

std::string Excitation::str() const {
  if (kind == Kind::Single) {
    return std::to_string(from[0]) + "->" + std::to_string(to[0]);
  }
  return std::to_string(from[0]) + "," + std::to_string(from[1]) + "->" +
         std::to_string(to[0]) + "," + std::to_string(to[1]);
}

OperatorPool build_uccsd_pool(const MolecularProblem& p) {
  p.validate();
  const std::uint32_t m = static_cast<std::uint32_t>(2 * p.n_spatial);
  const std::uint64_t occ_mask = hf_reference(p);

  std::vector<std::uint32_t> occ, vir;
  for (std::uint32_t q = 0; q < m; ++q) {
    ((occ_mask >> q) & 1 ? occ : vir).push_back(q);
  }
  auto spin = [&](std::uint32_t q) {
    return q < static_cast<std::uint32_t>(p.n_spatial) ? 0 : 1;
  };

  OperatorPool pool;
  pool.n_qubits = m;
  std::map<std::uint64_t, std::size_t> seen_flip_sets;

  auto try_add = [&](const FermionOperator& gen, const Excitation& exc) {
    auto word = representative_word(gen);
    if (!word) return;
    if (seen_flip_sets.contains(word->flip_mask())) return;
    seen_flip_sets[word->flip_mask()] = pool.generators.size();
    pool.generators.push_back(*word);
    pool.provenance.push_back(exc);
  };

  // Spin-preserving singles i -> a, ascending (i, a).
  for (std::uint32_t i : occ) {
    for (std::uint32_t a : vir) {
      if (spin(i) != spin(a)) continue;
      FermionOperator gen;
      gen.n_spin_orbitals = m;
      gen.add_term(1.0, {{a, true}, {i, false}});
      gen.add_term(-1.0, {{i, true}, {a, false}});
      try_add(gen, {Excitation::Kind::Single, {i, 0}, {a, 0}});
    }
  }

  // Sz-preserving doubles ij -> ab with i < j, a < b, ascending (i, j, a, b).
  for (std::size_t ii = 0; ii < occ.size(); ++ii) {
    for (std::size_t jj = ii + 1; jj < occ.size(); ++jj) {
      const std::uint32_t i = occ[ii], j = occ[jj];
      for (std::size_t aa = 0; aa < vir.size(); ++aa) {
        for (std::size_t bb = aa + 1; bb < vir.size(); ++bb) {
          const std::uint32_t a = vir[aa], b = vir[bb];
          if (spin(i) + spin(j) != spin(a) + spin(b)) continue;
          FermionOperator gen;
          gen.n_spin_orbitals = m;
          gen.add_term(1.0, {{a, true}, {b, true}, {j, false}, {i, false}});
          gen.add_term(-1.0, {{i, true}, {j, true}, {b, false}, {a, false}});
          try_add(gen, {Excitation::Kind::Double, {i, j}, {a, b}});
        }
      }
    }
  }

  return pool;
}

}  // namespace cvqe
