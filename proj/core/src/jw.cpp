#include "cvqe/jw.hpp"

#include <cmath>
#include <stdexcept>

namespace cvqe {

void FermionOperator::add_term(Complex c, std::vector<Ladder> ops) {
  for (const auto& op : ops) {
    if (op.orbital >= n_spin_orbitals) {
      throw std::invalid_argument("spin-orbital index out of range");
    }
  }
  terms.push_back({c, std::move(ops)});
}

PauliSum jordan_wigner(const Ladder& op, std::uint32_t n) {
  if (op.orbital >= n) {
    throw std::invalid_argument("spin-orbital index out of range");
  }
  const std::uint64_t chain = (std::uint64_t{1} << op.orbital) - 1;
  const std::uint64_t site = std::uint64_t{1} << op.orbital;
  PauliSum out(n);
  // X_j * chain and Y_j * chain with coefficients 1/2 and -+ i/2.
  out.add(PauliWord(n, site, chain), Complex(0.5, 0));
  out.add(PauliWord(n, site, chain | site),
          op.create ? Complex(0, -0.5) : Complex(0, 0.5));
  return out;
}

PauliSum jordan_wigner(const FermionOperator& f) {
  PauliSum out(f.n_spin_orbitals);
  for (const auto& term : f.terms) {
    PauliSum acc = PauliSum::from_term(PauliWord::identity(f.n_spin_orbitals),
                                       term.coefficient);
    for (const auto& op : term.ops) {
      acc = multiply_sums(acc, jordan_wigner(op, f.n_spin_orbitals));
    }
    out.add(acc);
  }
  return out;
}

PauliSum build_qubit_hamiltonian(const MolecularProblem& p) {
  p.validate();
  const int n = p.n_spatial;
  const std::uint32_t m = static_cast<std::uint32_t>(2 * n);
  if (m > 64) throw std::invalid_argument("too many spin-orbitals");

  FermionOperator f;
  f.n_spin_orbitals = m;
  constexpr double kSkip = 1e-14;

  // One-body part: spins must match; blocked (alpha | beta) ordering.
  for (int s = 0; s < 2; ++s) {
    for (int P = 0; P < n; ++P) {
      for (int Q = 0; Q < n; ++Q) {
        const double v = p.one_body(P, Q);
        if (std::abs(v) < kSkip) continue;
        const std::uint32_t sp = static_cast<std::uint32_t>(P + s * n);
        const std::uint32_t sq = static_cast<std::uint32_t>(Q + s * n);
        f.add_term(v, {{sp, true}, {sq, false}});
      }
    }
  }

  // Two-body part: 1/2 sum_pqrs <pq|rs> a^dag_p a^dag_q a_s a_r with
  // <pq|rs> = (PR|QS) for sigma_p = sigma_r, sigma_q = sigma_s.
  for (int sp = 0; sp < 2; ++sp) {
    for (int sq = 0; sq < 2; ++sq) {
      for (int P = 0; P < n; ++P) {
        for (int Q = 0; Q < n; ++Q) {
          for (int R = 0; R < n; ++R) {
            for (int S = 0; S < n; ++S) {
              const double v = p.eri(P, R, Q, S);
              if (std::abs(v) < kSkip) continue;
              const std::uint32_t a = static_cast<std::uint32_t>(P + sp * n);
              const std::uint32_t b = static_cast<std::uint32_t>(Q + sq * n);
              const std::uint32_t cc = static_cast<std::uint32_t>(S + sq * n);
              const std::uint32_t d = static_cast<std::uint32_t>(R + sp * n);
              if (a == b || cc == d) continue;  // Pauli exclusion kills these
              f.add_term(0.5 * v, {{a, true}, {b, true}, {cc, false}, {d, false}});
            }
          }
        }
      }
    }
  }

  PauliSum h = jordan_wigner(f);
  h.add(PauliWord::identity(m), Complex(p.core_energy, 0));
  h = h.pruned(kPruneTol);
  if (h.max_imag() > 1e-10) {
    throw std::runtime_error("qubit Hamiltonian came out non-Hermitian");
  }
  // Coefficients are real up to accumulation noise; store them as such.
  PauliSum real_h(m);
  for (const auto& [w, c] : h) real_h.add(w, Complex(c.real(), 0));
  return real_h.pruned(kPruneTol);
}

std::uint64_t hf_reference(const MolecularProblem& p) {
  p.validate();
  const int n_alpha = (p.n_electrons + p.ms2) / 2;
  const int n_beta = (p.n_electrons - p.ms2) / 2;
  if (n_alpha < 0 || n_beta < 0 || n_alpha > p.n_spatial ||
      n_beta > p.n_spatial) {
    throw std::invalid_argument("electron count exceeds orbital capacity");
  }
  std::uint64_t mask = 0;
  for (int i = 0; i < n_alpha; ++i) mask |= std::uint64_t{1} << i;
  for (int i = 0; i < n_beta; ++i) mask |= std::uint64_t{1} << (p.n_spatial + i);
  return mask;
}

PauliSum number_operator(std::uint32_t n_qubits) {
  PauliSum out(n_qubits);
  for (std::uint32_t q = 0; q < n_qubits; ++q) {
    out.add(PauliWord::identity(n_qubits), Complex(0.5, 0));
    out.add(PauliWord::single(n_qubits, q, 'Z'), Complex(-0.5, 0));
  }
  return out;
}

}  // namespace cvqe
