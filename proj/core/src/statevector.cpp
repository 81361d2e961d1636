#include "cvqe/statevector.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace cvqe {

namespace {

void require_sim_size(std::uint32_t n) {
  if (n == 0 || n > kMaxSimQubits) {
    throw std::invalid_argument("statevector supports 1.." +
                                std::to_string(kMaxSimQubits) + " qubits");
  }
}

int parity(std::uint64_t v) { return std::popcount(v) & 1; }

const Complex kPhases[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

// P|b> = i^{#Y} (-1)^{|z & b|} |b ^ x>; this returns the scalar in front.
inline Complex word_phase(const PauliWord& p, std::uint64_t b) {
  const int k = (p.y_count() + 2 * parity(p.z & b)) & 3;
  return kPhases[k];
}

}  // namespace

StateVector::StateVector(std::uint32_t n) : n_(n) {
  require_sim_size(n);
  amp_.assign(std::size_t{1} << n, Complex(0, 0));
}

StateVector StateVector::basis_state(std::uint32_t n, std::uint64_t occupation) {
  require_sim_size(n);
  if (occupation >> n) {
    throw std::invalid_argument("occupation mask exceeds register size");
  }
  StateVector s(n);
  s.amp_[occupation] = Complex(1, 0);
  return s;
}

double StateVector::norm() const {
  double s = 0;
  for (const auto& a : amp_) s += std::norm(a);
  return std::sqrt(s);
}

void StateVector::normalize() {
  const double n = norm();
  if (n == 0) throw std::runtime_error("cannot normalize the zero vector");
  for (auto& a : amp_) a /= n;
}

void StateVector::apply_word(const PauliWord& p) {
  if (p.n_qubits != n_) throw std::invalid_argument("word/state size mismatch");
  const std::uint64_t x = p.x;
  if (x == 0) {
    for (std::uint64_t b = 0; b < amp_.size(); ++b) {
      amp_[b] *= word_phase(p, b);
    }
    return;
  }
  for (std::uint64_t b = 0; b < amp_.size(); ++b) {
    const std::uint64_t bp = b ^ x;
    if (b < bp) {
      // P maps |b> -> phase(b)|bp> and |bp> -> phase(bp)|b>.
      const Complex pb = word_phase(p, b);
      const Complex pbp = word_phase(p, bp);
      const Complex t = amp_[b];
      amp_[b] = pbp * amp_[bp];
      amp_[bp] = pb * t;
    }
  }
}

void StateVector::apply_rotation(const PauliWord& p, double theta) {
  if (p.n_qubits != n_) throw std::invalid_argument("word/state size mismatch");
  const double c = std::cos(theta), s = std::sin(theta);
  const Complex is(0, s);
  const std::uint64_t x = p.x;
  if (x == 0) {
    // Diagonal generator: per-amplitude phase e^{i theta (+-1)}.
    for (std::uint64_t b = 0; b < amp_.size(); ++b) {
      amp_[b] *= c + is * word_phase(p, b);
    }
    return;
  }
  for (std::uint64_t b = 0; b < amp_.size(); ++b) {
    const std::uint64_t bp = b ^ x;
    if (b < bp) {
      const Complex pb = word_phase(p, b);
      const Complex pbp = word_phase(p, bp);
      const Complex ab = amp_[b], abp = amp_[bp];
      amp_[b] = c * ab + is * pbp * abp;
      amp_[bp] = c * abp + is * pb * ab;
    }
  }
}

Complex StateVector::expectation(const PauliWord& p) const {
  if (p.n_qubits != n_) throw std::invalid_argument("word/state size mismatch");
  Complex acc(0, 0);
  for (std::uint64_t b = 0; b < amp_.size(); ++b) {
    const std::uint64_t bp = b ^ p.x;
    acc += std::conj(amp_[bp]) * word_phase(p, b) * amp_[b];
  }
  return acc;
}

Complex inner(const StateVector& a, const StateVector& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("state size mismatch");
  Complex acc(0, 0);
  for (std::size_t i = 0; i < a.amp_.size(); ++i) {
    acc += std::conj(a.amp_[i]) * b.amp_[i];
  }
  return acc;
}

StateVector apply_sum(const PauliSum& h, const StateVector& s) {
  StateVector out(s.n_qubits());
  auto& oa = out.amplitudes();
  const auto& sa = s.amplitudes();
  for (const auto& [w, c] : h) {
    if (w.n_qubits != s.n_qubits()) {
      throw std::invalid_argument("sum/state size mismatch");
    }
    for (std::uint64_t b = 0; b < sa.size(); ++b) {
      oa[b ^ w.x] += c * word_phase(w, b) * sa[b];
    }
  }
  return out;
}

double expectation(const StateVector& s, const PauliSum& h) {
  if (!h.is_hermitian()) {
    throw std::invalid_argument("expectation requires a Hermitian Pauli sum");
  }
  const Complex v = expectation_complex(s, h);
  if (std::abs(v.imag()) > kCoeffTol) {
    throw std::runtime_error("expectation of Hermitian sum came out complex");
  }
  return v.real();
}

Complex expectation_complex(const StateVector& s, const PauliSum& h) {
  Complex acc(0, 0);
  for (const auto& [w, c] : h) acc += c * s.expectation(w);
  return acc;
}

double gradient_term(const StateVector& psi, const PauliSum& h,
                     const PauliSum& p_eff) {
  const StateVector hpsi = apply_sum(h, psi);
  const StateVector ppsi = apply_sum(p_eff, psi);
  return 2.0 * inner(ppsi, hpsi).imag();
}

}  // namespace cvqe
