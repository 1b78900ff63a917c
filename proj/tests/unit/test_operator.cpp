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


#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

#include "doctest.h"
#include "wnnm/error.hpp"
#include "wnnm/operator.hpp"
#include "wnnm/random.hpp"

using wnnm::Matrix;
using Vec = std::vector<double>;

namespace {

Matrix diag(Vec v) { return Matrix::diagonal(v); }

struct Problem {
  Matrix y;
  Vec w;
};

Problem random_problem(wnnm::Rng& rng, std::size_t max_rows = 6,
                       std::size_t max_cols = 5) {
  std::uniform_int_distribution<std::size_t> rows(1, max_rows);
  std::uniform_int_distribution<std::size_t> cols(1, max_cols);
  Problem p;
  p.y = wnnm::random_uniform_matrix(rng, rows(rng), cols(rng), -2.0, 2.0);
  const double top = wnnm::singular_values(p.y).front();
  p.w = wnnm::random_uniform_vector(rng, std::min(p.y.rows(), p.y.cols()), 0.0,
                                    2.0 * top);
  return p;
}

}  // namespace

TEST_CASE("wnnm_solve examples") {
  auto r = wnnm::wnnm_solve(diag({3, 1}), Vec{1, 1});
  CHECK(wnnm::max_abs_diff(r.x_star, diag({2.5, 0.5})) <= 1e-14);
  CHECK(r.path == wnnm::SolverPath::ClosedForm);
  CHECK(r.objective == doctest::Approx(3.5));

  for (auto [m, n] : {std::pair{3, 2}, std::pair{2, 4}, std::pair{1, 1}}) {
    const Matrix zero(m, n);
    auto z = wnnm::wnnm_solve(zero, Vec(std::min(m, n), 1.0));
    CHECK(z.x_star == zero);
  }

  r = wnnm::wnnm_solve(diag({3, 2}), Vec{4, 0});
  CHECK(r.path == wnnm::SolverPath::Pava);
  CHECK(wnnm::max_abs_diff(r.x_star, diag({1.5, 1.5})) <= 1e-14);
}

TEST_CASE("wnnm_solve rejects malformed weights") {
  CHECK_THROWS_AS(wnnm::wnnm_solve(diag({3, 1}), Vec{1}), wnnm::InvalidInput);
  CHECK_THROWS_AS(wnnm::wnnm_solve(diag({3, 1}), Vec{1, 1, 1}),
                  wnnm::InvalidInput);
  CHECK_THROWS_AS(wnnm::wnnm_solve(diag({3, 1}), Vec{1, -1}),
                  wnnm::InvalidInput);
  CHECK_THROWS_AS(wnnm::wnnm_solve(diag({3, 2}), Vec{4, 0},
                                   {.path = wnnm::PathChoice::ClosedForm}),
                  wnnm::PreconditionViolation);
}

TEST_CASE("nnm_solve examples") {
  auto r = wnnm::nnm_solve(diag({3, 1}), 1.0);
  CHECK(wnnm::max_abs_diff(r.x_star, diag({2.5, 0.5})) <= 1e-14);
  CHECK(wnnm::nnm_solve(diag({1, 1}), 4.0).x_star == Matrix(2, 2));

  wnnm::Rng rng(1);
  const Matrix y = wnnm::random_uniform_matrix(rng, 4, 3);
  CHECK(wnnm::max_abs_diff(wnnm::nnm_solve(y, 0.0).x_star, y) <= 1e-8);
  CHECK_THROWS_AS(wnnm::nnm_solve(y, -0.1), wnnm::InvalidInput);
}

TEST_CASE("objective_full examples") {
  CHECK(wnnm::objective_full(diag({3, 1}), diag({3, 1}), Vec{0, 0}) == 0.0);
  CHECK(wnnm::objective_full(diag({3, 1}), Matrix(2, 2), Vec{1, 1}) ==
        doctest::Approx(10.0));
  CHECK(wnnm::objective_full(diag({3, 1}), diag({2.5, 0.5}), Vec{1, 1}) ==
        doctest::Approx(3.5));
  CHECK_THROWS_AS(wnnm::objective_full(diag({3, 1}), Matrix(2, 3), Vec{1, 1}),
                  wnnm::InvalidInput);
}

TEST_CASE("result invariants") {
  wnnm::Rng rng(5);
  for (int t = 0; t < 100; ++t) {
    const Problem p = random_problem(rng);
    const auto r = wnnm::wnnm_solve(p.y, p.w);
    const Vec sx = wnnm::singular_values(r.x_star);
    for (std::size_t i = 0; i < sx.size(); ++i)
      CHECK(std::abs(sx[i] - r.d.d[i]) <= 1e-8);
    const double fit = wnnm::frobenius_norm(p.y - r.x_star);
    double penalty = 0.0;
    for (std::size_t i = 0; i < sx.size(); ++i) penalty += p.w[i] * sx[i];
    CHECK(std::abs(r.objective - (fit * fit + penalty)) <= 1e-8);
    // The spectral objective and the matrix objective coincide at the optimum.
    double y_norm = wnnm::frobenius_norm(p.y);
    double sigma_sq = 0.0;
    for (double s : r.factors.sigma) sigma_sq += s * s;
    CHECK(std::abs(r.d.objective - sigma_sq - (r.objective - y_norm * y_norm)) <=
          1e-8);
  }
}

TEST_CASE("no candidate beats the WNNM solution") {
  wnnm::Rng rng(7);
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (int t = 0; t < 100; ++t) {
    const Problem p = random_problem(rng);
    const auto r = wnnm::wnnm_solve(p.y, p.w);
    const double best = wnnm::objective_full(p.y, r.x_star, p.w);
    const std::size_t m = p.y.rows();
    const std::size_t n = p.y.cols();
    double worst_gap = -1.0;
    for (int k = 0; k < 500; ++k) {
      Matrix cand;
      switch (k % 5) {
        case 0:  // small perturbation of the optimum
        case 1: {
          const double scale = k % 5 == 0 ? 1e-3 : 1e-1;
          cand = r.x_star + scale * wnnm::random_uniform_matrix(rng, m, n);
          break;
        }
        case 2:
          cand = p.y + 0.5 * wnnm::random_uniform_matrix(rng, m, n);
          break;
        case 3: {
          const std::size_t rank = std::uniform_int_distribution<std::size_t>(
              0, std::min(m, n))(rng);
          cand = wnnm::random_low_rank(rng, m, n, rank, 2.0);
          break;
        }
        default: {
          // Same singular vectors, any other feasible spectrum.
          Vec d = wnnm::random_uniform_vector(rng, r.factors.sigma.size(), 0.0,
                                              r.factors.sigma.front() + 0.5);
          std::sort(d.begin(), d.end(), std::greater<>());
          cand = wnnm::reconstruct(r.factors, d);
        }
      }
      worst_gap = std::max(worst_gap, best - wnnm::objective_full(p.y, cand, p.w));
    }
    CHECK(worst_gap <= 1e-6);
  }
}

TEST_CASE("uniform weights reduce to singular value thresholding") {
  wnnm::Rng rng(9);
  for (int t = 0; t < 100; ++t) {
    const Problem p = random_problem(rng);
    const double lambda = p.w.front();
    const Vec w(p.w.size(), lambda);
    CHECK(wnnm::max_abs_diff(wnnm::nnm_solve(p.y, lambda).x_star,
                             wnnm::wnnm_solve(p.y, w).x_star) <= 1e-10);
  }
}

TEST_CASE("optimal value is orthogonally invariant") {
  wnnm::Rng rng(13);
  for (int t = 0; t < 100; ++t) {
    const Problem p = random_problem(rng);
    const Matrix pm = wnnm::random_orthogonal(rng, p.y.rows());
    const Matrix qm = wnnm::random_orthogonal(rng, p.y.cols());
    const double a = wnnm::wnnm_solve(p.y, p.w).objective;
    const double b = wnnm::wnnm_solve(pm * p.y * qm.transposed(), p.w).objective;
    CHECK(std::abs(a - b) <= 1e-8);
  }
}

TEST_CASE("zero weights leave the input unchanged") {
  wnnm::Rng rng(17);
  for (int t = 0; t < 100; ++t) {
    const Problem p = random_problem(rng);
    const Vec w(p.w.size(), 0.0);
    CHECK(wnnm::max_abs_diff(wnnm::wnnm_solve(p.y, w).x_star, p.y) <= 1e-8);
  }
}

TEST_CASE("forcing PAVA reproduces the closed-form path") {
  wnnm::Rng rng(19);
  for (int t = 0; t < 100; ++t) {
    Problem p = random_problem(rng);
    std::sort(p.w.begin(), p.w.end());
    const auto a = wnnm::wnnm_solve(p.y, p.w);
    const auto b = wnnm::wnnm_solve(p.y, p.w, {.path = wnnm::PathChoice::Pava});
    CHECK(a.path == wnnm::SolverPath::ClosedForm);
    CHECK(b.path == wnnm::SolverPath::Pava);
    CHECK(wnnm::max_abs_diff(a.x_star, b.x_star) <= 1e-10);
  }
}

TEST_CASE("trace identity examples") {
  auto r = wnnm::lemma1_identity_check(diag({2, 1}), Vec{3, 1}, 10);
  CHECK(r.lhs == doctest::Approx(7.0));
  CHECK(r.rhs_at_svd == doctest::Approx(7.0));
  CHECK(r.max_random_rhs <= r.lhs + 1e-8);

  r = wnnm::lemma1_identity_check(Matrix(3, 2), Vec{2, 1}, 10);
  CHECK(r.lhs == 0.0);
  CHECK(r.rhs_at_svd == 0.0);
  CHECK(r.max_random_rhs == 0.0);

  wnnm::Rng rng(23);
  const Matrix a = wnnm::random_uniform_matrix(rng, 4, 3);
  r = wnnm::lemma1_identity_check(a, Vec{2, 1, 0}, 1000, 99);
  CHECK(std::abs(r.lhs - r.rhs_at_svd) <= 1e-8);
  CHECK(r.max_random_rhs <= r.lhs + 1e-8);
  CHECK(r.max_random_rhs > 0.0);

  CHECK_THROWS_AS(wnnm::lemma1_identity_check(a, Vec{0, 1, 2}, 10),
                  wnnm::PreconditionViolation);
  CHECK_THROWS_AS(wnnm::lemma1_identity_check(a, Vec{2, 1, 0}, 0),
                  wnnm::InvalidInput);
}
