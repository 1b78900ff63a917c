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


#include "wnnm/operator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "wnnm/error.hpp"
#include "wnnm/random.hpp"

namespace wnnm {

namespace {

void validate_weights(const Matrix& y, std::span<const double> w,
                      const char* op) {
  const std::size_t k = std::min(y.rows(), y.cols());
  if (w.size() != k) {
    throw InvalidInput(std::string(op) + ": expected " + std::to_string(k) +
                       " weights (one per singular value), got " +
                       std::to_string(w.size()));
  }
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!std::isfinite(w[i]) || w[i] < 0.0) {
      throw InvalidInput(std::string(op) + ": weight[" + std::to_string(i) +
                         "] must be finite and >= 0");
    }
  }
}

}  // namespace

double objective_full(const Matrix& y, const Matrix& x,
                      std::span<const double> w) {
  if (y.rows() != x.rows() || y.cols() != x.cols()) {
    throw InvalidInput("objective_full: y is " + std::to_string(y.rows()) +
                       "x" + std::to_string(y.cols()) + ", x is " +
                       std::to_string(x.rows()) + "x" +
                       std::to_string(x.cols()));
  }
  validate_weights(y, w, "objective_full");
  const double fit = frobenius_norm(y - x);
  const std::vector<double> sigma = singular_values(x);
  double penalty = 0.0;
  for (std::size_t i = 0; i < sigma.size(); ++i) penalty += w[i] * sigma[i];
  return fit * fit + penalty;
}

WnnmResult wnnm_solve(const Matrix& y, std::span<const double> w,
                      const SolverOptions& options) {
  if (y.empty()) throw InvalidInput("wnnm_solve: empty matrix");
  validate_weights(y, w, "wnnm_solve");

  SvdFactors factors = svd(y);
  DiagSolution d;
  switch (options.path) {
    case PathChoice::Auto:
      d = is_non_descending(w) ? closed_form(factors.sigma, w)
                               : pava_solve(factors.sigma, w);
      break;
    case PathChoice::ClosedForm:
      d = closed_form(factors.sigma, w);
      break;
    case PathChoice::Pava:
      d = pava_solve(factors.sigma, w);
      break;
  }

  WnnmResult result;
  result.x_star = reconstruct(factors, d.d);
  result.objective = objective_full(y, result.x_star, w);
  result.path = d.path;
  result.factors = std::move(factors);
  result.d = std::move(d);
  return result;
}

WnnmResult nnm_solve(const Matrix& y, double lambda) {
  if (!std::isfinite(lambda) || lambda < 0.0)
    throw InvalidInput("nnm_solve: lambda must be finite and >= 0");
  if (y.empty()) throw InvalidInput("nnm_solve: empty matrix");

  SvdFactors factors = svd(y);
  const std::vector<double> w(factors.sigma.size(), lambda);
  std::vector<double> shrunk(factors.sigma.size());
  for (std::size_t i = 0; i < shrunk.size(); ++i)
    shrunk[i] = std::max(0.0, factors.sigma[i] - lambda / 2.0);

  WnnmResult result;
  result.x_star = reconstruct(factors, shrunk);
  result.objective = objective_full(y, result.x_star, w);
  result.path = SolverPath::ClosedForm;
  result.d.objective = objective_diag(shrunk, factors.sigma, w);
  result.d.d = std::move(shrunk);
  result.d.path = SolverPath::ClosedForm;
  result.factors = std::move(factors);
  return result;
}

double weighted_trace(const Matrix& u, const Matrix& a, const Matrix& v,
                      std::span<const double> w) {
  if (u.rows() != a.rows() || v.rows() != a.cols()) {
    throw InvalidInput("weighted_trace: factor shapes do not match a");
  }
  if (w.size() > std::min(u.cols(), v.cols())) {
    throw InvalidInput("weighted_trace: more weights than factor columns");
  }
  // (U^T a V)_ii = u_i^T a v_i
  double total = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    double diag = 0.0;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      double av = 0.0;
      for (std::size_t c = 0; c < a.cols(); ++c) av += a(r, c) * v(c, i);
      diag += u(r, i) * av;
    }
    total += w[i] * diag;
  }
  return total;
}

TraceIdentityReport lemma1_identity_check(const Matrix& a,
                                          std::span<const double> w,
                                          int trials, std::uint64_t seed) {
  if (a.empty()) throw InvalidInput("lemma1_identity_check: empty matrix");
  if (trials < 1)
    throw InvalidInput("lemma1_identity_check: trials must be >= 1");
  validate_weights(a, w, "lemma1_identity_check");
  for (std::size_t i = 1; i < w.size(); ++i) {
    if (w[i] > w[i - 1]) {
      throw PreconditionViolation(
          "lemma1_identity_check: weights must be non-ascending (index " +
          std::to_string(i) + ")");
    }
  }

  const SvdFactors f = svd(a);
  TraceIdentityReport report;
  for (std::size_t i = 0; i < w.size(); ++i) report.lhs += f.sigma[i] * w[i];
  report.rhs_at_svd = weighted_trace(f.u, a, f.v, w);

  Rng rng(seed);
  report.max_random_rhs = -std::numeric_limits<double>::infinity();
  for (int t = 0; t < trials; ++t) {
    const Matrix u = random_orthogonal(rng, a.rows());
    const Matrix v = random_orthogonal(rng, a.cols());
    report.max_random_rhs =
        std::max(report.max_random_rhs, weighted_trace(u, a, v, w));
  }
  return report;
}

}  // namespace wnnm
