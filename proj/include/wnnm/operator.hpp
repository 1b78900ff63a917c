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


#ifndef WNNM_OPERATOR_HPP
#define WNNM_OPERATOR_HPP

#include <cstdint>
#include <span>

#include "wnnm/diag_solver.hpp"
#include "wnnm/matrix.hpp"
#include "wnnm/svd.hpp"

namespace wnnm {

// Which diagonal solver wnnm_solve uses. Auto picks the closed form when the
// weights are non-descending and PAVA otherwise.
enum class PathChoice { Auto, ClosedForm, Pava };

struct SolverOptions {
  PathChoice path = PathChoice::Auto;
};

struct WnnmResult {
  Matrix x_star;
  SvdFactors factors;
  DiagSolution d;
  // ||y - x_star||_F^2 + sum_i w_i sigma_i(x_star), with sigma(x_star) taken
  // from a fresh decomposition of x_star.
  double objective = 0.0;
  SolverPath path = SolverPath::ClosedForm;
};

// Globally optimal minimizer of ||y - x||_F^2 + sum_i w_i sigma_i(x).
// `w` must hold exactly min(rows, cols) nonnegative weights.
WnnmResult wnnm_solve(const Matrix& y, std::span<const double> w,
                      const SolverOptions& options = {});

// Uniform-weight case: singular value soft-thresholding at lambda / 2.
WnnmResult nnm_solve(const Matrix& y, double lambda);

// ||y - x||_F^2 + sum_i w_i sigma_i(x).
double objective_full(const Matrix& y, const Matrix& x,
                      std::span<const double> w);

struct TraceIdentityReport {
  double lhs = 0.0;             // sum_i sigma_i(a) w_i
  double rhs_at_svd = 0.0;      // tr[W U^T a V] at the SVD factors of a
  double max_random_rhs = 0.0;  // max of the same trace over random U, V
};

// tr[W U^T a V] for diagonal W = diag(w) with w of length <= min(rows, cols).
// U and V may be square or thin; only their leading len(w) columns matter.
double weighted_trace(const Matrix& u, const Matrix& a, const Matrix& v,
                      std::span<const double> w);

// Checks the von Neumann-type trace inequality: for non-ascending nonnegative
// w the weighted trace over orthogonal U, V is maximized at the singular
// vectors of a, where it equals sum_i sigma_i(a) w_i. Random orthogonal
// pairs come from a seeded generator.
TraceIdentityReport lemma1_identity_check(const Matrix& a,
                                          std::span<const double> w,
                                          int trials, std::uint64_t seed = 0);

}  // namespace wnnm

#endif  // WNNM_OPERATOR_HPP
