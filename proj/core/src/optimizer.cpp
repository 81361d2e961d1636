#include "cvqe/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <deque>

namespace cvqe {

namespace {

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double inf_norm(std::span<const double> v) {
  double m = 0;
  for (double e : v) m = std::max(m, std::abs(e));
  return m;
}

struct Pair {
  std::vector<double> s, y;
  double rho;
};

// Two-loop recursion; returns -H grad.
std::vector<double> lbfgs_direction(const std::deque<Pair>& mem,
                                    std::span<const double> grad) {
  std::vector<double> q(grad.begin(), grad.end());
  std::vector<double> alpha(mem.size());
  for (std::size_t k = mem.size(); k-- > 0;) {
    alpha[k] = mem[k].rho * dot(mem[k].s, q);
    for (std::size_t i = 0; i < q.size(); ++i) q[i] -= alpha[k] * mem[k].y[i];
  }
  if (!mem.empty()) {
    const auto& last = mem.back();
    const double gamma = dot(last.s, last.y) / dot(last.y, last.y);
    for (auto& e : q) e *= gamma;
  }
  for (std::size_t k = 0; k < mem.size(); ++k) {
    const double beta = mem[k].rho * dot(mem[k].y, q);
    for (std::size_t i = 0; i < q.size(); ++i) {
      q[i] += (alpha[k] - beta) * mem[k].s[i];
    }
  }
  for (auto& e : q) e = -e;
  return q;
}

}  // namespace

MinimizeResult minimize(const Objective& fn, std::vector<double> x0,
                        const MinimizeOptions& opts) {
  MinimizeResult out;
  const std::size_t n = x0.size();
  if (n == 0) {
    out.x = std::move(x0);
    out.converged = true;
    return out;
  }

  std::vector<double> x = std::move(x0), grad(n);
  int evals = 0;
  auto eval = [&](std::span<const double> px, std::span<double> pg) {
    ++evals;
    return fn(px, pg);
  };

  double f = eval(x, grad);
  std::vector<double> best_x = x;
  double best_f = f;

  constexpr double c1 = 1e-4, c2 = 0.9;
  std::deque<Pair> memory;
  std::vector<double> xt(n), gt(n);

  bool converged = inf_norm(grad) <= opts.grad_tol;
  int restarts_without_progress = 0;

  while (!converged && evals < opts.max_evaluations &&
         restarts_without_progress < 2) {
    std::vector<double> dir = lbfgs_direction(memory, grad);
    double dg = dot(dir, grad);
    if (!(dg < 0)) {
      memory.clear();
      for (std::size_t i = 0; i < n; ++i) dir[i] = -grad[i];
      dg = dot(dir, grad);
      if (!(dg < 0)) break;  // gradient numerically zero
    }

    // Strong-Wolfe line search: bracket, then bisection zoom.
    const double f0 = f, dg0 = dg;
    const std::vector<double> x_old = x, g_old = grad;
    double alpha = memory.empty() ? std::min(1.0, 1.0 / inf_norm(dir)) : 1.0;
    double alpha_prev = 0, f_prev = f0;
    double alpha_lo = 0, alpha_hi = 0, f_lo = f0;
    bool bracketed = false, accepted = false;

    for (int ls = 0; ls < 60 && evals < opts.max_evaluations; ++ls) {
      for (std::size_t i = 0; i < n; ++i) xt[i] = x_old[i] + alpha * dir[i];
      const double ft = eval(xt, gt);
      if (ft < best_f) {
        best_f = ft;
        best_x = xt;
      }
      const double dgt = dot(dir, gt);

      bool take = false;
      if (!bracketed) {
        if (ft > f0 + c1 * alpha * dg0 || (ls > 0 && ft >= f_prev)) {
          alpha_lo = alpha_prev;
          f_lo = f_prev;
          alpha_hi = alpha;
          bracketed = true;
        } else if (std::abs(dgt) <= -c2 * dg0) {
          take = true;
        } else if (dgt >= 0) {
          alpha_lo = alpha;
          f_lo = ft;
          alpha_hi = alpha_prev;
          bracketed = true;
        } else {
          alpha_prev = alpha;
          f_prev = ft;
          alpha *= 2.0;
          if (alpha > 1e10) take = true;  // pathologically flat direction
        }
      } else {
        if (ft > f0 + c1 * alpha * dg0 || ft >= f_lo) {
          alpha_hi = alpha;
        } else if (std::abs(dgt) <= -c2 * dg0) {
          take = true;
        } else {
          if (dgt * (alpha_hi - alpha_lo) >= 0) alpha_hi = alpha_lo;
          alpha_lo = alpha;
          f_lo = ft;
        }
      }

      if (take || (bracketed && std::abs(alpha_hi - alpha_lo) <
                                    1e-14 * std::max(1.0, std::abs(alpha_lo)))) {
        x = xt;
        f = ft;
        grad = gt;
        accepted = true;
        break;
      }
      if (bracketed) alpha = 0.5 * (alpha_lo + alpha_hi);
    }

    if (!accepted) {
      // Budget or iteration cap inside the search: keep the best lo point
      // if it moved, otherwise drop the memory and retry once.
      if (bracketed && alpha_lo > 0) {
        for (std::size_t i = 0; i < n; ++i) xt[i] = x_old[i] + alpha_lo * dir[i];
        f = eval(xt, gt);
        if (f < best_f) {
          best_f = f;
          best_x = xt;
        }
        x = xt;
        grad = gt;
      } else {
        memory.clear();
        ++restarts_without_progress;
        continue;
      }
    }
    restarts_without_progress = 0;

    Pair pair;
    pair.s.resize(n);
    pair.y.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      pair.s[i] = x[i] - x_old[i];
      pair.y[i] = grad[i] - g_old[i];
    }
    const double sy = dot(pair.s, pair.y);
    if (sy > 1e-12 * std::sqrt(dot(pair.s, pair.s) * dot(pair.y, pair.y))) {
      pair.rho = 1.0 / sy;
      memory.push_back(std::move(pair));
      if (static_cast<int>(memory.size()) > opts.history) memory.pop_front();
    }

    converged = inf_norm(grad) <= opts.grad_tol;
  }

  out.x = std::move(best_x);
  out.f = best_f;
  out.evaluations = evals;
  out.converged = converged;
  return out;
}

}  // namespace cvqe
