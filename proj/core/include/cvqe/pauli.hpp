#pragma once

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cvqe {

using Complex = std::complex<double>;

/// Default magnitude below which Pauli-sum coefficients are dropped.
inline constexpr double kPruneTol = 1e-12;
/// Absolute tolerance for coefficient equality comparisons.
inline constexpr double kCoeffTol = 1e-10;

/**
 * An n-qubit tensor product of I/X/Y/Z, stored as two bit masks.
 *
 * Bit q of `x` is set iff qubit q carries X or Y; bit q of `z` is set iff
 * qubit q carries Z or Y. Words are phase-free group labels: any phase
 * produced by multiplication lives in the coefficients of a PauliSum.
 *
 * Convention: qubit 0 is the leftmost letter in string renderings and the
 * least significant bit of basis-state indices.
 */
struct PauliWord {
  std::uint32_t n_qubits = 0;
  std::uint64_t x = 0;
  std::uint64_t z = 0;

  PauliWord() = default;
  PauliWord(std::uint32_t n, std::uint64_t x_mask, std::uint64_t z_mask);

  static PauliWord identity(std::uint32_t n) { return PauliWord(n, 0, 0); }
  /// Parse a letter string such as "XYIZ" (qubit 0 = leftmost letter).
  static PauliWord from_letters(std::string_view letters);
  /// Single non-identity letter at qubit q.
  static PauliWord single(std::uint32_t n, std::uint32_t q, char letter);

  bool is_identity() const { return x == 0 && z == 0; }
  /// Qubits acted on non-trivially.
  std::uint64_t support() const { return x | z; }
  /// Qubit positions carrying X or Y (the flip indices).
  std::uint64_t flip_mask() const { return x; }
  /// Number of Y letters.
  int y_count() const;

  char letter(std::uint32_t q) const;
  std::string str() const;

  bool operator==(const PauliWord& o) const {
    return n_qubits == o.n_qubits && x == o.x && z == o.z;
  }
  /// Strict order on (x, z); any fixed total order works as a map key.
  bool operator<(const PauliWord& o) const {
    return x != o.x ? x < o.x : z < o.z;
  }
};

/// True iff a's letter string sorts lexicographically before b's (I<X<Y<Z).
bool letter_lex_less(const PauliWord& a, const PauliWord& b);

/// Product a*b = phase * word with phase in {1, i, -1, -i}.
std::pair<PauliWord, Complex> multiply(const PauliWord& a, const PauliWord& b);

/// Symplectic commutation test: true iff [a, b] = 0.
bool commutes(const PauliWord& a, const PauliWord& b);

/**
 * Gather the letters of `word` at the listed qubit positions, in order,
 * into a word on the |cluster_qubits|-qubit sub-register. The tensor
 * product of the restrictions over a full partition reassembles the word
 * with phase +1 (letters are independent per qubit).
 */
PauliWord restrict_to_cluster(const PauliWord& word,
                              std::span<const std::uint32_t> cluster_qubits);

/**
 * A complex-coefficient linear combination of Pauli words.
 *
 * Terms are kept in a deterministic order so that iteration (and hence
 * floating-point accumulation) is reproducible run to run. Coefficients
 * with magnitude below kPruneTol are removed by normalization passes.
 */
class PauliSum {
 public:
  using TermMap = std::map<PauliWord, Complex>;

  PauliSum() = default;
  explicit PauliSum(std::uint32_t n) : n_qubits_(n) {}

  static PauliSum from_term(const PauliWord& w, Complex c);

  std::uint32_t n_qubits() const { return n_qubits_; }
  std::size_t term_count() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }

  const TermMap& terms() const { return terms_; }
  TermMap::const_iterator begin() const { return terms_.begin(); }
  TermMap::const_iterator end() const { return terms_.end(); }

  /// Coefficient of a word (0 if absent).
  Complex coefficient(const PauliWord& w) const;

  /// Accumulate c * w; erases the entry if the sum falls below kPruneTol.
  void add(const PauliWord& w, Complex c);
  void add(const PauliSum& other, Complex scale = 1.0);

  PauliSum& operator*=(Complex scale);
  PauliSum operator+(const PauliSum& other) const;
  PauliSum operator-(const PauliSum& other) const;
  PauliSum operator*(Complex scale) const;

  /// Right-multiply every term by the word, folding phases into coefficients.
  PauliSum multiplied_by_word(const PauliWord& p) const;

  /// Drop terms with |coefficient| < tol (tol = 0 removes exact zeros only).
  PauliSum pruned(double tol) const;

  bool is_hermitian(double tol = kCoeffTol) const;
  /// Largest |imaginary part| over coefficients.
  double max_imag() const;
  /// 2-norm of the coefficient vector.
  double coefficient_norm() const;

  bool approx_equal(const PauliSum& other, double tol = kCoeffTol) const;

  /// One term per line: `<coefficient> <letters>`, complex as `(re,im)`.
  /// Terms are emitted in canonical (letter-lexicographic) order.
  std::string to_text() const;
  static PauliSum from_text(std::istream& in);
  static PauliSum from_text(const std::string& text);

 private:
  std::uint32_t n_qubits_ = 0;
  TermMap terms_;
};

/// Operator product of two sums (phases folded into coefficients).
PauliSum multiply_sums(const PauliSum& a, const PauliSum& b);

/**
 * Commutator of a sum with a word: [H, P] = sum over anticommuting terms A
 * of 2*alpha_A*(A*P). Commuting terms contribute nothing. The result is
 * anti-Hermitian for Hermitian H.
 */
PauliSum commutator_with_word(const PauliSum& h, const PauliWord& p);

/**
 * Exponential conjugation e^{-i theta P} H e^{i theta P}.
 *
 * Terms commuting with P are unchanged; an anticommuting term A maps to
 * cos(2 theta) A + i sin(2 theta) A P. Preserves Hermiticity and the
 * eigenvalue multiset; at most doubles the term count. The result is
 * pruned at `tol`.
 */
PauliSum conjugate_by_rotation(const PauliSum& h, const PauliWord& p,
                               double theta, double tol = kPruneTol);

}  // namespace cvqe
