#include "cvqe/fcidump.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace cvqe {

namespace {

[[noreturn]] void fail(int line_no, const std::string& what) {
  throw std::runtime_error("FCIDUMP parse error at line " +
                           std::to_string(line_no) + ": " + what);
}

// Extract `KEY=value` from the namelist header; returns false if absent.
bool find_int_field(const std::string& header, const std::string& key,
                    int& out) {
  auto pos = header.find(key);
  while (pos != std::string::npos) {
    const auto after = pos + key.size();
    // Guard against matching inside a longer identifier (e.g. NELEC in X).
    const bool starts_token = pos == 0 || !std::isalnum(header[pos - 1]);
    if (starts_token && after < header.size() && header[after] == '=') {
      std::size_t idx = after + 1;
      try {
        std::size_t used = 0;
        out = std::stoi(header.substr(idx), &used);
        return true;
      } catch (const std::exception&) {
        return false;
      }
    }
    pos = header.find(key, pos + 1);
  }
  return false;
}

void set_h1(MolecularProblem& p, int i, int j, double v) {
  p.h1[i * p.n_spatial + j] = v;
  p.h1[j * p.n_spatial + i] = v;
}

void set_eri(MolecularProblem& p, int i, int j, int k, int l, double v) {
  const int n = p.n_spatial;
  auto put = [&](int a, int b, int c, int d) {
    p.h2[((a * n + b) * n + c) * n + d] = v;
  };
  put(i, j, k, l);
  put(j, i, k, l);
  put(i, j, l, k);
  put(j, i, l, k);
  put(k, l, i, j);
  put(l, k, i, j);
  put(k, l, j, i);
  put(l, k, j, i);
}

}  // namespace

void MolecularProblem::validate(double tol) const {
  if (n_spatial <= 0) throw std::invalid_argument("NORB must be positive");
  if (n_electrons < 0 || n_electrons > 2 * n_spatial) {
    throw std::invalid_argument("electron count exceeds orbital capacity");
  }
  if ((n_electrons + ms2) % 2 != 0 || std::abs(ms2) > n_electrons) {
    throw std::invalid_argument("inconsistent NELEC/MS2 pair");
  }
  const int n = n_spatial;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (std::abs(one_body(i, j) - one_body(j, i)) > tol) {
        throw std::invalid_argument("one-electron integrals not symmetric");
      }
    }
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          const double v = eri(i, j, k, l);
          if (std::abs(v - eri(j, i, k, l)) > tol ||
              std::abs(v - eri(i, j, l, k)) > tol ||
              std::abs(v - eri(k, l, i, j)) > tol) {
            throw std::invalid_argument(
                "two-electron integrals violate 8-fold symmetry");
          }
        }
}

MolecularProblem parse_fcidump(std::istream& in) {
  std::string line;
  int line_no = 0;

  // Collect the namelist header, which may span several lines and ends at
  // "&END" or a bare "/".
  std::string header;
  bool header_done = false;
  bool saw_begin = false;
  while (!header_done && std::getline(in, line)) {
    ++line_no;
    std::string upper(line);
    std::transform(upper.begin(), upper.end(), upper.begin(),
                   [](unsigned char c) { return std::toupper(c); });
    if (!saw_begin) {
      const auto amp = upper.find("&FCI");
      if (amp == std::string::npos) {
        if (upper.find_first_not_of(" \t\r") == std::string::npos) continue;
        fail(line_no, "expected &FCI header");
      }
      saw_begin = true;
      upper = upper.substr(amp + 4);
    }
    const auto end_tag = upper.find("&END");
    const auto slash = upper.find('/');
    if (end_tag != std::string::npos) {
      header += upper.substr(0, end_tag);
      header_done = true;
    } else if (slash != std::string::npos) {
      header += upper.substr(0, slash);
      header_done = true;
    } else {
      header += upper;
    }
    header += ' ';
  }
  if (!saw_begin) fail(line_no, "missing &FCI header");
  if (!header_done) fail(line_no, "unterminated header (no &END or /)");

  MolecularProblem p;
  if (!find_int_field(header, "NORB", p.n_spatial)) {
    fail(line_no, "header missing NORB");
  }
  if (!find_int_field(header, "NELEC", p.n_electrons)) {
    fail(line_no, "header missing NELEC");
  }
  find_int_field(header, "MS2", p.ms2);  // optional, defaults to 0
  if (p.n_spatial <= 0 || p.n_spatial > 32) {
    fail(line_no, "NORB out of supported range 1..32");
  }

  const int n = p.n_spatial;
  p.h1.assign(static_cast<std::size_t>(n) * n, 0.0);
  p.h2.assign(static_cast<std::size_t>(n) * n * n * n, 0.0);

  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    double v;
    int i, j, k, l;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (!(ls >> v >> i >> j >> k >> l)) {
      fail(line_no, "expected `value i j k l` record");
    }
    std::string rest;
    if (ls >> rest) fail(line_no, "trailing characters '" + rest + "'");
    auto in_range = [&](int idx) { return idx >= 1 && idx <= n; };
    if (i == 0 && j == 0 && k == 0 && l == 0) {
      p.core_energy = v;
    } else if (k == 0 && l == 0) {
      if (!in_range(i) || !in_range(j)) fail(line_no, "orbital index out of range");
      set_h1(p, i - 1, j - 1, v);
    } else {
      if (!in_range(i) || !in_range(j) || !in_range(k) || !in_range(l)) {
        fail(line_no, "orbital index out of range");
      }
      set_eri(p, i - 1, j - 1, k - 1, l - 1, v);
    }
  }

  p.validate();
  return p;
}

MolecularProblem load_fcidump(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open FCIDUMP file: " + path);
  try {
    return parse_fcidump(in);
  } catch (const std::exception& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

}  // namespace cvqe
