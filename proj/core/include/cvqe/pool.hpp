#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cvqe/fcidump.hpp"
#include "cvqe/jw.hpp"
#include "cvqe/pauli.hpp"

namespace cvqe {

/// Originating excitation of a pool generator, in spin-orbital indices.
struct Excitation {
  enum class Kind { Single, Double };
  Kind kind;
  std::uint32_t from[2];  // occupied; [1] unused for singles
  std::uint32_t to[2];    // virtual;  [1] unused for singles
  std::string str() const;
};

/**
 * Qubit-UCCSD operator pool: one Pauli word per distinct flip-index set,
 * chosen as the lexicographically smallest letter string among the
 * odd-Y-count words of the Jordan-Wigner image of each anti-Hermitian
 * excitation generator t - t^dag. Order is deterministic: singles before
 * doubles, ascending orbital indices.
 */
struct OperatorPool {
  std::uint32_t n_qubits = 0;
  std::vector<PauliWord> generators;
  std::vector<Excitation> provenance;

  std::size_t size() const { return generators.size(); }
};

OperatorPool build_uccsd_pool(const MolecularProblem& p);

}  // namespace cvqe
