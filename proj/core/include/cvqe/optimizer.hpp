#pragma once

#include <functional>
#include <span>
#include <vector>

namespace cvqe {

struct MinimizeOptions {
  double grad_tol = 1e-8;       // exit when ||grad||_inf <= grad_tol
  int max_evaluations = 5000;   // combined f/g evaluation budget
  int history = 10;             // L-BFGS memory
};

struct MinimizeResult {
  std::vector<double> x;
  double f = 0;
  int evaluations = 0;
  bool converged = false;  // gradient criterion met (budget exhaustion if not)
};

/// Objective callback: fill `grad` and return f(x).
using Objective =
    std::function<double(std::span<const double> x, std::span<double> grad)>;

/**
 * L-BFGS with a strong-Wolfe line search. Deterministic for a
 * deterministic objective; returns the best point seen, so the reported
 * value never exceeds f(x0).
 */
MinimizeResult minimize(const Objective& fn, std::vector<double> x0,
                        const MinimizeOptions& opts = {});

}  // namespace cvqe
