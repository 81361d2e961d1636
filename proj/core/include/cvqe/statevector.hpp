#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "cvqe/pauli.hpp"

namespace cvqe {

/// Exact simulator size guard; memory doubles per qubit beyond this.
inline constexpr std::uint32_t kMaxSimQubits = 16;

/**
 * Dense statevector on n qubits. Basis index bit q corresponds to qubit q
 * (qubit 0 = least significant bit). Unit 2-norm is maintained by every
 * operation.
 */
class StateVector {
 public:
  explicit StateVector(std::uint32_t n);

  /// Computational basis state |occupation> (bit q of the mask = qubit q).
  static StateVector basis_state(std::uint32_t n, std::uint64_t occupation);

  std::uint32_t n_qubits() const { return n_; }
  std::size_t dim() const { return amp_.size(); }
  const std::vector<Complex>& amplitudes() const { return amp_; }
  std::vector<Complex>& amplitudes() { return amp_; }
  Complex amplitude(std::uint64_t idx) const { return amp_[idx]; }

  double norm() const;
  void normalize();

  /// In-place |s> <- P|s>.
  void apply_word(const PauliWord& p);
  /// In-place |s> <- e^{i theta P}|s> = cos(theta)|s> + i sin(theta) P|s>.
  void apply_rotation(const PauliWord& p, double theta);

  /// <s|P|s> (complex in general; real for the phase-free Hermitian word).
  Complex expectation(const PauliWord& p) const;

  friend Complex inner(const StateVector& a, const StateVector& b);

 private:
  std::uint32_t n_;
  std::vector<Complex> amp_;
};

/// <a|b>.
Complex inner(const StateVector& a, const StateVector& b);

/// |out> = H|s> as a dense vector (sum over terms).
StateVector apply_sum(const PauliSum& h, const StateVector& s);

/// <s|H|s> for Hermitian H; throws if H has an imaginary coefficient, and
/// asserts the value is real within kCoeffTol before discarding the
/// imaginary part.
double expectation(const StateVector& s, const PauliSum& h);

/// <s|H|s> without the Hermiticity gate (used for commutator-style sums).
Complex expectation_complex(const StateVector& s, const PauliSum& h);

/**
 * Derivative of E(theta) = <psi_theta|H|psi_theta> for |psi_theta> =
 * e^{i theta P_eff}|psi> at theta = 0, evaluated ancilla-free as
 * 2 Im <P_eff psi|H|psi>. P_eff must be Hermitian.
 */
double gradient_term(const StateVector& psi, const PauliSum& h,
                     const PauliSum& p_eff);

}  // namespace cvqe
