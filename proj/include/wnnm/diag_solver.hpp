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


#ifndef WNNM_DIAG_SOLVER_HPP
#define WNNM_DIAG_SOLVER_HPP

#include <span>
#include <string_view>
#include <vector>

namespace wnnm {

// Solvers for the spectral subproblem
//
//   minimize  sum_i (d_i - sigma_i)^2 + w_i d_i
//   s.t.      d_1 >= d_2 >= ... >= d_n >= 0
//
// where sigma is non-increasing and nonnegative and w is nonnegative.
// Every returned solution is feasible with zero tolerance.

enum class SolverPath { ClosedForm, Pava, ProjGrad, BruteForce };

std::string_view to_string(SolverPath path);

// Absolute slack allowed when testing weights for non-descending order.
inline constexpr double kWeightOrderTolerance = 1e-12;

struct DiagSolution {
  std::vector<double> d;
  double objective = 0.0;
  SolverPath path = SolverPath::Pava;
};

double objective_diag(std::span<const double> d, std::span<const double> sigma,
                      std::span<const double> w);

bool is_non_descending(std::span<const double> w,
                       double tolerance = kWeightOrderTolerance);

// d_i = max(sigma_i - w_i / 2, 0). Only optimal when w is non-descending;
// anything else raises PreconditionViolation.
DiagSolution closed_form(std::span<const double> sigma,
                         std::span<const double> w);

// Exact solver for arbitrary nonnegative weights: targets sigma - w/2 are
// projected onto the non-increasing cone by pool-adjacent-violators and then
// clamped at zero.
DiagSolution pava_solve(std::span<const double> sigma,
                        std::span<const double> w);

// Euclidean projection onto {d_1 >= ... >= d_n >= 0}.
std::vector<double> project_monotone_nonnegative(std::span<const double> x);

// Projected gradient descent on the same objective. Step size is 1/4 (half
// the reciprocal Lipschitz constant); stops once an update moves less than
// `tol` in max-norm. Throws ConvergenceFailure after `max_iter` updates.
DiagSolution projgrad_reference(std::span<const double> sigma,
                                std::span<const double> w, double tol = 1e-10,
                                int max_iter = 100000);

inline constexpr std::size_t kBruteForceMaxDim = 4;

// Exact minimizer over the grid {0, h, 2h, ..., floor((sigma_1 + 1)/h) h}^n
// restricted to the chain constraint. Refuses n > kBruteForceMaxDim.
// Evaluated by dynamic programming over the chain, which visits the same
// feasible grid points as nested enumeration in O(n * grid size). Ties
// resolve to the smallest grid value, coordinate by coordinate.
DiagSolution brute_force_oracle(std::span<const double> sigma,
                                std::span<const double> w, double grid_step);

}  // namespace wnnm

#endif  // WNNM_DIAG_SOLVER_HPP
