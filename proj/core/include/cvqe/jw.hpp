#pragma once

#include <cstdint>
#include <vector>

#include "cvqe/fcidump.hpp"
#include "cvqe/pauli.hpp"

namespace cvqe {

/// One creation (true) or annihilation (false) operator on a spin-orbital.
struct Ladder {
  std::uint32_t orbital;
  bool create;
};

/// A linear combination of ladder-operator products, stored as written.
struct FermionOperator {
  struct Term {
    Complex coefficient;
    std::vector<Ladder> ops;
  };
  std::uint32_t n_spin_orbitals = 0;
  std::vector<Term> terms;

  void add_term(Complex c, std::vector<Ladder> ops);
};

/// Jordan-Wigner image of a single ladder operator:
/// a^dag_j -> (X_j - iY_j)/2 * Z_{j-1}...Z_0, a_j -> (X_j + iY_j)/2 * chain.
PauliSum jordan_wigner(const Ladder& op, std::uint32_t n_spin_orbitals);

/// Jordan-Wigner image of a full fermionic operator.
PauliSum jordan_wigner(const FermionOperator& f);

/**
 * Qubit Hamiltonian of a molecular problem under Jordan-Wigner encoding.
 *
 * Spin-orbitals are blocked (all alpha, then all beta): spin-orbital
 * p = P for alpha and p = P + n_spatial for beta, with P the spatial
 * index. H = E_core + sum h_pq a^dag_p a_q
 * + 1/2 sum <pq|rs> a^dag_p a^dag_q a_s a_r, where the physicist-notation
 * element <pq|rs> is the chemist (PR|QS) integral for matching spins.
 * The result is pruned at kPruneTol and has real coefficients.
 */
PauliSum build_qubit_hamiltonian(const MolecularProblem& p);

/**
 * Hartree-Fock occupation mask: the (n_electrons + ms2)/2 lowest alpha
 * spin-orbitals and the (n_electrons - ms2)/2 lowest beta spin-orbitals,
 * in blocked order.
 */
std::uint64_t hf_reference(const MolecularProblem& p);

/// Total-number operator sum_q (I - Z_q)/2 on n qubits.
PauliSum number_operator(std::uint32_t n_qubits);

}  // namespace cvqe
