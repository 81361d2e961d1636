#pragma once

#include <optional>

#include "cvqe/pauli.hpp"
#include "cvqe/statevector.hpp"

namespace cvqe {

struct GroundState {
  double energy;
  StateVector state;
};

/**
 * Lowest eigenpair of a Hermitian Pauli sum on up to kMaxSimQubits qubits.
 *
 * With `particle_sector` set, the search is restricted to the span of
 * computational basis states whose occupation number equals the given
 * electron count (the Hamiltonian block for number-conserving H).
 * Small problems are solved densely; larger ones by Lanczos with full
 * reorthogonalization to 1e-9 relative accuracy.
 */
GroundState exact_ground_state(const PauliSum& h,
                               std::optional<int> particle_sector = {});

}  // namespace cvqe
