// Copyright 2026 The wnnm Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "wnnm/diag_solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "wnnm/error.hpp"

namespace wnnm {

namespace {

void require_same_length(std::span<const double> sigma,
                         std::span<const double> w, const char* op) {
  if (sigma.size() != w.size()) {
    throw InvalidInput(std::string(op) + ": sigma has " +
                       std::to_string(sigma.size()) + " entries, weights have " +
                       std::to_string(w.size()));
  }
}

void validate_sigma(std::span<const double> sigma, const char* op) {
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    if (!std::isfinite(sigma[i]) || sigma[i] < 0.0) {
      throw InvalidInput(std::string(op) + ": sigma[" + std::to_string(i) +
                         "] must be finite and >= 0");
    }
    if (i > 0 && sigma[i] > sigma[i - 1]) {
      throw InvalidInput(std::string(op) + ": sigma must be non-increasing (index " +
                         std::to_string(i) + ")");
    }
  }
}

void validate_weights(std::span<const double> w, const char* op) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!std::isfinite(w[i]) || w[i] < 0.0) {
      throw InvalidInput(std::string(op) + ": weight[" + std::to_string(i) +
                         "] must be finite and >= 0");
    }
  }
}

void validate(std::span<const double> sigma, std::span<const double> w,
              const char* op) {
  require_same_length(sigma, w, op);
  validate_sigma(sigma, op);
  validate_weights(w, op);
}

DiagSolution make_solution(std::vector<double> d, std::span<const double> sigma,
                           std::span<const double> w, SolverPath path) {
  DiagSolution s;
  s.objective = objective_diag(d, sigma, w);
  s.d = std::move(d);
  s.path = path;
  return s;
}

// Pool-adjacent-violators for the non-increasing order with unit
// observation weights. Blocks live on a stack as (sum, count); a new block
// merges into its predecessor while its mean is larger.
std::vector<double> isotonic_non_increasing(std::span<const double> x) {
  struct Block {
    double sum;
    std::size_t count;
    double mean() const { return sum / static_cast<double>(count); }
  };
  std::vector<Block> stack;
  stack.reserve(x.size());
  for (double v : x) {
    stack.push_back({v, 1});
    while (stack.size() > 1 &&
           stack.back().mean() > stack[stack.size() - 2].mean()) {
      const Block top = stack.back();
      stack.pop_back();
      stack.back().sum += top.sum;
      stack.back().count += top.count;
    }
  }
  std::vector<double> out;
  out.reserve(x.size());
  for (const Block& b : stack) out.insert(out.end(), b.count, b.mean());
  return out;
}

}  // namespace

std::string_view to_string(SolverPath path) {
  switch (path) {
    case SolverPath::ClosedForm:
      return "closed-form";
    case SolverPath::Pava:
      return "pava";
    case SolverPath::ProjGrad:
      return "projgrad";
    case SolverPath::BruteForce:
      return "brute-force";
  }
  return "unknown";
}

double objective_diag(std::span<const double> d, std::span<const double> sigma,
                      std::span<const double> w) {
  if (d.size() != sigma.size() || d.size() != w.size()) {
    throw InvalidInput("objective_diag: length mismatch (d=" +
                       std::to_string(d.size()) + ", sigma=" +
                       std::to_string(sigma.size()) + ", w=" +
                       std::to_string(w.size()) + ")");
  }
  double total = 0.0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    const double r = d[i] - sigma[i];
    total += r * r + w[i] * d[i];
  }
  return total;
}

bool is_non_descending(std::span<const double> w, double tolerance) {
  for (std::size_t i = 1; i < w.size(); ++i)
    if (w[i] < w[i - 1] - tolerance) return false;
  return true;
}

DiagSolution closed_form(std::span<const double> sigma,
                         std::span<const double> w) {
  validate(sigma, w, "closed_form");
  if (!is_non_descending(w)) {
    throw PreconditionViolation(
        "closed_form: weights are not non-descending; use pava_solve for "
        "arbitrary weight order");
  }
  std::vector<double> d(sigma.size());
  for (std::size_t i = 0; i < d.size(); ++i) {
    d[i] = std::max(sigma[i] - w[i] / 2.0, 0.0);
    // Weights may descend by up to the tolerance; keep the chain exact.
    if (i > 0) d[i] = std::min(d[i], d[i - 1]);
  }
  return make_solution(std::move(d), sigma, w, SolverPath::ClosedForm);
}

std::vector<double> project_monotone_nonnegative(std::span<const double> x) {
  std::vector<double> out = isotonic_non_increasing(x);
  for (double& v : out) v = std::max(v, 0.0);
  return out;
}

DiagSolution pava_solve(std::span<const double> sigma,
                        std::span<const double> w) {
  validate(sigma, w, "pava_solve");
  // (d - sigma)^2 + w d = (d - (sigma - w/2))^2 + const.
  std::vector<double> targets(sigma.size());
  for (std::size_t i = 0; i < targets.size(); ++i)
    targets[i] = sigma[i] - w[i] / 2.0;
  return make_solution(project_monotone_nonnegative(targets), sigma, w,
                       SolverPath::Pava);
}

DiagSolution projgrad_reference(std::span<const double> sigma,
                                std::span<const double> w, double tol,
                                int max_iter) {
  validate(sigma, w, "projgrad_reference");
  if (!(tol > 0.0)) throw InvalidInput("projgrad_reference: tol must be > 0");
  if (max_iter < 1)
    throw InvalidInput("projgrad_reference: max_iter must be >= 1");

  constexpr double kStep = 0.25;
  const std::size_t n = sigma.size();
  std::vector<double> d(n, 0.0);
  std::vector<double> trial(n);
  for (int iter = 0; iter < max_iter; ++iter) {
    for (std::size_t i = 0; i < n; ++i) {
      const double grad = 2.0 * (d[i] - sigma[i]) + w[i];
      trial[i] = d[i] - kStep * grad;
    }
    std::vector<double> next = project_monotone_nonnegative(trial);
    double move = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      move = std::max(move, std::abs(next[i] - d[i]));
    d = std::move(next);
    if (move < tol) {
      return make_solution(std::move(d), sigma, w, SolverPath::ProjGrad);
    }
  }
  const double last = objective_diag(d, sigma, w);
  throw ConvergenceFailure("projgrad_reference: no convergence within " +
                               std::to_string(max_iter) + " iterations",
                           std::move(d), last);
}

DiagSolution brute_force_oracle(std::span<const double> sigma,
                                std::span<const double> w, double grid_step) {
  validate(sigma, w, "brute_force_oracle");
  const std::size_t n = sigma.size();
  if (n > kBruteForceMaxDim) {
    throw InvalidInput("brute_force_oracle: refusing n=" + std::to_string(n) +
                       " (limit " + std::to_string(kBruteForceMaxDim) + ")");
  }
  if (!(grid_step > 0.0) || !std::isfinite(grid_step))
    throw InvalidInput("brute_force_oracle: grid_step must be > 0");
  if (n == 0) return make_solution({}, sigma, w, SolverPath::BruteForce);

  const double upper = sigma[0] + 1.0;
  const double steps = std::floor(upper / grid_step + 1e-9);
  if (steps > 5e7)
    throw InvalidInput("brute_force_oracle: grid too fine for sigma_1");
  const std::size_t points = static_cast<std::size_t>(steps) + 1;
  auto value = [grid_step](std::size_t k) {
    return static_cast<double>(k) * grid_step;
  };
  auto term = [&](std::size_t i, std::size_t k) {
    const double v = value(k);
    const double r = v - sigma[i];
    return r * r + w[i] * v;
  };

  // best[k]: minimal cost of coordinates i..n-1 given d_i at grid index k.
  // choice[i][k]: index of d_{i+1} attaining that, constrained to <= k.
  std::vector<double> best(points);
  for (std::size_t k = 0; k < points; ++k) best[k] = term(n - 1, k);
  std::vector<std::vector<std::size_t>> choice(n);
  for (std::size_t i = n - 1; i-- > 0;) {
    choice[i].resize(points);
    std::vector<double> next(points);
    double run_min = std::numeric_limits<double>::infinity();
    std::size_t run_arg = 0;
    for (std::size_t k = 0; k < points; ++k) {
      if (best[k] < run_min) {
        run_min = best[k];
        run_arg = k;
      }
      choice[i][k] = run_arg;
      next[k] = term(i, k) + run_min;
    }
    best = std::move(next);
  }

  std::size_t k = static_cast<std::size_t>(
      std::min_element(best.begin(), best.end()) - best.begin());
  std::vector<double> d(n);
  d[0] = value(k);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    k = choice[i][k];
    d[i + 1] = value(k);
  }
  return make_solution(std::move(d), sigma, w, SolverPath::BruteForce);
}

}  // namespace wnnm
