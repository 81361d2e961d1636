#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cvqe {

/**
 * Molecular integrals in a spatial-orbital active space, as read from an
 * FCIDUMP file. One-electron integrals are symmetric; two-electron
 * integrals are stored in chemist (ij|kl) convention with the full 8-fold
 * permutational symmetry completed from the unique stored elements.
 */
struct MolecularProblem {
  int n_spatial = 0;
  int n_electrons = 0;
  int ms2 = 0;
  double core_energy = 0.0;
  std::vector<double> h1;  // n_spatial^2, row-major
  std::vector<double> h2;  // n_spatial^4, chemist (ij|kl)

  double one_body(int i, int j) const { return h1[i * n_spatial + j]; }
  double eri(int i, int j, int k, int l) const {
    const int n = n_spatial;
    return h2[((i * n + j) * n + k) * n + l];
  }

  /// Throws if the stored integrals violate the documented symmetries.
  void validate(double tol = 1e-10) const;
};

/// Parse an FCIDUMP stream. Diagnostics carry the 1-based line number.
MolecularProblem parse_fcidump(std::istream& in);

/// Convenience wrapper that reads a file and prefixes errors with its path.
MolecularProblem load_fcidump(const std::string& path);

}  // namespace cvqe
