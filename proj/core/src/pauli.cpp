#include "cvqe/pauli.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <istream>
#include <sstream>
#include <stdexcept>

namespace cvqe {

namespace {

void require_same_size(const PauliWord& a, const PauliWord& b) {
  if (a.n_qubits != b.n_qubits) {
    throw std::invalid_argument("Pauli word size mismatch: " +
                                std::to_string(a.n_qubits) + " vs " +
                                std::to_string(b.n_qubits));
  }
}

int parity(std::uint64_t v) { return std::popcount(v) & 1; }

// Order I < X < Y < Z for letter-lexicographic comparisons.
int letter_rank(bool has_x, bool has_z) {
  if (!has_x && !has_z) return 0;
  if (has_x && !has_z) return 1;
  if (has_x && has_z) return 2;
  return 3;
}

const Complex kPhases[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

}  // namespace

PauliWord::PauliWord(std::uint32_t n, std::uint64_t x_mask, std::uint64_t z_mask)
    : n_qubits(n), x(x_mask), z(z_mask) {
  if (n == 0 || n > 64) {
    throw std::invalid_argument("Pauli word needs 1..64 qubits");
  }
  const std::uint64_t valid = n == 64 ? ~0ull : ((1ull << n) - 1);
  if ((x & ~valid) != 0 || (z & ~valid) != 0) {
    throw std::invalid_argument("Pauli word mask exceeds qubit count");
  }
}

PauliWord PauliWord::from_letters(std::string_view letters) {
  if (letters.empty() || letters.size() > 64) {
    throw std::invalid_argument("Pauli letter string needs length 1..64");
  }
  std::uint64_t x = 0, z = 0;
  for (std::size_t q = 0; q < letters.size(); ++q) {
    switch (letters[q]) {
      case 'I':
        break;
      case 'X':
        x |= 1ull << q;
        break;
      case 'Y':
        x |= 1ull << q;
        z |= 1ull << q;
        break;
      case 'Z':
        z |= 1ull << q;
        break;
      default:
        throw std::invalid_argument(std::string("bad Pauli letter '") +
                                    letters[q] + "'");
    }
  }
  return PauliWord(static_cast<std::uint32_t>(letters.size()), x, z);
}

PauliWord PauliWord::single(std::uint32_t n, std::uint32_t q, char letter) {
  if (q >= n) throw std::invalid_argument("qubit index out of range");
  PauliWord w = identity(n);
  switch (letter) {
    case 'I':
      break;
    case 'X':
      w.x |= 1ull << q;
      break;
    case 'Y':
      w.x |= 1ull << q;
      w.z |= 1ull << q;
      break;
    case 'Z':
      w.z |= 1ull << q;
      break;
    default:
      throw std::invalid_argument(std::string("bad Pauli letter '") + letter +
                                  "'");
  }
  return w;
}

int PauliWord::y_count() const { return std::popcount(x & z); }

char PauliWord::letter(std::uint32_t q) const {
  if (q >= n_qubits) throw std::invalid_argument("qubit index out of range");
  const bool hx = (x >> q) & 1, hz = (z >> q) & 1;
  if (hx && hz) return 'Y';
  if (hx) return 'X';
  if (hz) return 'Z';
  return 'I';
}

std::string PauliWord::str() const {
  std::string s(n_qubits, 'I');
  for (std::uint32_t q = 0; q < n_qubits; ++q) s[q] = letter(q);
  return s;
}

bool letter_lex_less(const PauliWord& a, const PauliWord& b) {
  require_same_size(a, b);
  for (std::uint32_t q = 0; q < a.n_qubits; ++q) {
    const int ra = letter_rank((a.x >> q) & 1, (a.z >> q) & 1);
    const int rb = letter_rank((b.x >> q) & 1, (b.z >> q) & 1);
    if (ra != rb) return ra < rb;
  }
  return false;
}

std::pair<PauliWord, Complex> multiply(const PauliWord& a, const PauliWord& b) {
  require_same_size(a, b);
  PauliWord c(a.n_qubits, a.x ^ b.x, a.z ^ b.z);
  // Write each word as i^{#Y} X^x Z^z; commuting X^bx past Z^az costs
  // (-1)^{|az & bx|}. Track the power of i mod 4.
  int k = a.y_count() + b.y_count() - c.y_count() + 2 * parity(a.z & b.x);
  return {c, kPhases[((k % 4) + 4) % 4]};
}

bool commutes(const PauliWord& a, const PauliWord& b) {
  require_same_size(a, b);
  return parity(a.x & b.z) == parity(a.z & b.x);
}

PauliWord restrict_to_cluster(const PauliWord& word,
                              std::span<const std::uint32_t> cluster_qubits) {
  if (cluster_qubits.empty()) {
    throw std::invalid_argument("cluster qubit list is empty");
  }
  std::uint64_t x = 0, z = 0;
  for (std::size_t t = 0; t < cluster_qubits.size(); ++t) {
    const std::uint32_t q = cluster_qubits[t];
    if (q >= word.n_qubits) {
      throw std::invalid_argument("cluster qubit index out of range");
    }
    x |= ((word.x >> q) & 1) << t;
    z |= ((word.z >> q) & 1) << t;
  }
  return PauliWord(static_cast<std::uint32_t>(cluster_qubits.size()), x, z);
}

PauliSum PauliSum::from_term(const PauliWord& w, Complex c) {
  PauliSum s(w.n_qubits);
  s.add(w, c);
  return s;
}

Complex PauliSum::coefficient(const PauliWord& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Complex(0, 0) : it->second;
}

void PauliSum::add(const PauliWord& w, Complex c) {
  if (n_qubits_ == 0) n_qubits_ = w.n_qubits;
  if (w.n_qubits != n_qubits_) {
    throw std::invalid_argument("Pauli sum term size mismatch");
  }
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (std::abs(it->second) < kPruneTol) terms_.erase(it);
  } else if (std::abs(c) < kPruneTol) {
    terms_.erase(it);
  }
}

void PauliSum::add(const PauliSum& other, Complex scale) {
  for (const auto& [w, c] : other.terms_) add(w, c * scale);
}

PauliSum& PauliSum::operator*=(Complex scale) {
  for (auto& [w, c] : terms_) c *= scale;
  return *this;
}

PauliSum PauliSum::operator+(const PauliSum& other) const {
  PauliSum out = *this;
  out.add(other);
  return out;
}

PauliSum PauliSum::operator-(const PauliSum& other) const {
  PauliSum out = *this;
  out.add(other, Complex(-1, 0));
  return out;
}

PauliSum PauliSum::operator*(Complex scale) const {
  PauliSum out = *this;
  out *= scale;
  return out;
}

PauliSum PauliSum::multiplied_by_word(const PauliWord& p) const {
  PauliSum out(n_qubits_);
  for (const auto& [w, c] : terms_) {
    auto [wp, phase] = multiply(w, p);
    out.add(wp, c * phase);
  }
  return out;
}

PauliSum PauliSum::pruned(double tol) const {
  if (tol < 0) throw std::invalid_argument("prune tolerance must be >= 0");
  PauliSum out(n_qubits_);
  for (const auto& [w, c] : terms_) {
    if (std::abs(c) >= tol && std::abs(c) >= kPruneTol) out.terms_[w] = c;
  }
  return out;
}

bool PauliSum::is_hermitian(double tol) const { return max_imag() <= tol; }

double PauliSum::max_imag() const {
  double m = 0;
  for (const auto& [w, c] : terms_) m = std::max(m, std::abs(c.imag()));
  return m;
}

double PauliSum::coefficient_norm() const {
  double s = 0;
  for (const auto& [w, c] : terms_) s += std::norm(c);
  return std::sqrt(s);
}

bool PauliSum::approx_equal(const PauliSum& other, double tol) const {
  if (n_qubits_ != other.n_qubits_) return false;
  for (const auto& [w, c] : terms_) {
    if (std::abs(c - other.coefficient(w)) > tol) return false;
  }
  for (const auto& [w, c] : other.terms_) {
    if (std::abs(c - coefficient(w)) > tol) return false;
  }
  return true;
}

namespace {

std::string format_coefficient(Complex c) {
  char buf[64];
  if (std::abs(c.imag()) < kPruneTol) {
    std::snprintf(buf, sizeof buf, "%.17g", c.real());
  } else {
    std::snprintf(buf, sizeof buf, "(%.17g,%.17g)", c.real(), c.imag());
  }
  return buf;
}

Complex parse_coefficient(const std::string& tok, int line_no) {
  try {
    if (!tok.empty() && tok.front() == '(') {
      const auto comma = tok.find(',');
      const auto close = tok.find(')');
      if (comma == std::string::npos || close == std::string::npos) {
        throw std::invalid_argument("unbalanced complex literal");
      }
      const double re = std::stod(tok.substr(1, comma - 1));
      const double im = std::stod(tok.substr(comma + 1, close - comma - 1));
      return {re, im};
    }
    std::size_t used = 0;
    const double re = std::stod(tok, &used);
    if (used != tok.size()) throw std::invalid_argument("trailing characters");
    return {re, 0.0};
  } catch (const std::exception&) {
    throw std::runtime_error("Pauli sum parse error at line " +
                             std::to_string(line_no) + ": bad coefficient '" +
                             tok + "'");
  }
}

}  // namespace

std::string PauliSum::to_text() const {
  std::vector<const TermMap::value_type*> order;
  order.reserve(terms_.size());
  for (const auto& kv : terms_) order.push_back(&kv);
  std::sort(order.begin(), order.end(), [](const auto* a, const auto* b) {
    return letter_lex_less(a->first, b->first);
  });
  std::string out;
  for (const auto* kv : order) {
    out += format_coefficient(kv->second);
    out += ' ';
    out += kv->first.str();
    out += '\n';
  }
  return out;
}

PauliSum PauliSum::from_text(std::istream& in) {
  PauliSum sum;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string coeff_tok, letters;
    if (!(ls >> coeff_tok)) continue;  // blank line
    if (coeff_tok.front() == '#') continue;
    if (!(ls >> letters)) {
      throw std::runtime_error("Pauli sum parse error at line " +
                               std::to_string(line_no) + ": missing letters");
    }
    PauliWord w = [&] {
      try {
        return PauliWord::from_letters(letters);
      } catch (const std::exception& e) {
        throw std::runtime_error("Pauli sum parse error at line " +
                                 std::to_string(line_no) + ": " + e.what());
      }
    }();
    sum.add(w, parse_coefficient(coeff_tok, line_no));
  }
  return sum;
}

PauliSum PauliSum::from_text(const std::string& text) {
  std::istringstream in(text);
  return from_text(in);
}

PauliSum multiply_sums(const PauliSum& a, const PauliSum& b) {
  if (a.n_qubits() != b.n_qubits()) {
    throw std::invalid_argument("sum product size mismatch");
  }
  PauliSum out(a.n_qubits());
  for (const auto& [wa, ca] : a) {
    for (const auto& [wb, cb] : b) {
      auto [w, phase] = multiply(wa, wb);
      out.add(w, ca * cb * phase);
    }
  }
  return out;
}

PauliSum commutator_with_word(const PauliSum& h, const PauliWord& p) {
  if (h.n_qubits() != 0 && h.n_qubits() != p.n_qubits) {
    throw std::invalid_argument("commutator size mismatch");
  }
  PauliSum out(p.n_qubits);
  for (const auto& [w, c] : h) {
    if (commutes(w, p)) continue;
    auto [wp, phase] = multiply(w, p);
    out.add(wp, 2.0 * c * phase);
  }
  return out;
}

PauliSum conjugate_by_rotation(const PauliSum& h, const PauliWord& p,
                               double theta, double tol) {
  if (h.n_qubits() != 0 && h.n_qubits() != p.n_qubits) {
    throw std::invalid_argument("conjugation size mismatch");
  }
  const double c2 = std::cos(2 * theta), s2 = std::sin(2 * theta);
  PauliSum out(p.n_qubits);
  for (const auto& [w, c] : h) {
    if (commutes(w, p)) {
      out.add(w, c);
    } else {
      out.add(w, c * c2);
      auto [wp, phase] = multiply(w, p);
      out.add(wp, c * s2 * Complex(0, 1) * phase);
    }
  }
  return out.pruned(tol);
}

}  // namespace cvqe
