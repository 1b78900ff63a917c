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


#include "wnnm/selftest.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <span>
#include <string>

#include "wnnm/diag_solver.hpp"
#include "wnnm/error.hpp"
#include "wnnm/operator.hpp"

namespace wnnm {

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::string fmt_vec(std::span<const double> v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out += ", ";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v[i]);
    out += buf;
  }
  return out + "]";
}

std::string fmt_exp(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", v);
  return buf;
}

using GeneralSolver =
    std::function<DiagSolution(std::span<const double>, std::span<const double>)>;

DiagSolution sign_flipped_pava(std::span<const double> sigma,
                               std::span<const double> w) {
  std::vector<double> targets(sigma.size());
  for (std::size_t i = 0; i < targets.size(); ++i)
    targets[i] = sigma[i] + w[i] / 2.0;
  DiagSolution s;
  s.d = project_monotone_nonnegative(targets);
  s.objective = objective_diag(s.d, sigma, w);
  s.path = SolverPath::Pava;
  return s;
}

struct Counts {
  std::size_t cross_solver;
  std::size_t oracle;
  std::size_t lemma1;
  int lemma1_trials;
  std::size_t nnm;
};

Counts counts_for(SelftestScale scale) {
  switch (scale) {
    case SelftestScale::None:
      return {0, 0, 0, 0, 0};
    case SelftestScale::Small:
      return {40, 40, 20, 200, 40};
    case SelftestScale::Full:
      return {200, 200, 100, 1000, 100};
  }
  return {0, 0, 0, 0, 0};
}

SuiteResult cross_solver_suite(Rng& rng, std::size_t count,
                               const GeneralSolver& solve) {
  constexpr double kTol = 1e-6;
  SuiteResult res{"cross-solver", true, count, ""};
  double worst = 0.0;
  for (std::size_t i = 0; i < count; ++i) {
    const DiagInstance inst = random_diag_instance(rng, 10);
    const DiagSolution a = solve(inst.sigma, inst.w);
    const DiagSolution b = projgrad_reference(inst.sigma, inst.w, 1e-10);
    const double gap = std::abs(a.objective - b.objective);
    worst = std::max(worst, gap);
    if (!(gap <= kTol)) {
      res.passed = false;
      res.detail = "instance " + std::to_string(i) +
                   ": sigma=" + fmt_vec(inst.sigma) + " w=" + fmt_vec(inst.w) +
                   " pava=" + fmt(a.objective) +
                   " projgrad=" + fmt(b.objective);
      return res;
    }
  }
  res.detail = "max |pava - projgrad| = " + fmt_exp(worst);
  return res;
}

SuiteResult oracle_suite(Rng& rng, std::size_t count,
                         const GeneralSolver& solve) {
  constexpr double kTol = 1e-4;
  SuiteResult res{"oracle", true, count, ""};
  double worst = -1e300;
  for (std::size_t i = 0; i < count; ++i) {
    const DiagInstance inst = random_diag_instance(rng, 3);
    const DiagSolution a = solve(inst.sigma, inst.w);
    const DiagSolution b = brute_force_oracle(inst.sigma, inst.w, 1e-3);
    const double excess = a.objective - b.objective;
    worst = std::max(worst, excess);
    if (!(excess <= kTol)) {
      res.passed = false;
      res.detail = "instance " + std::to_string(i) +
                   ": sigma=" + fmt_vec(inst.sigma) + " w=" + fmt_vec(inst.w) +
                   " pava=" + fmt(a.objective) + " oracle=" + fmt(b.objective);
      return res;
    }
  }
  if (count == 0) worst = 0.0;
  res.detail = "max (pava - oracle) = " + fmt_exp(worst);
  return res;
}

SuiteResult lemma1_suite(Rng& rng, std::size_t count, int trials) {
  constexpr double kTol = 1e-8;
  SuiteResult res{"trace-identity", true, count, ""};
  std::uniform_int_distribution<std::size_t> dim(1, 6);
  double worst_identity = 0.0;
  double worst_excess = -1e300;
  for (std::size_t i = 0; i < count; ++i) {
    const Matrix a = random_uniform_matrix(rng, dim(rng), dim(rng));
    std::vector<double> w =
        random_uniform_vector(rng, std::min(a.rows(), a.cols()), 0.0, 2.0);
    std::sort(w.begin(), w.end(), std::greater<>());
    const TraceIdentityReport r =
        lemma1_identity_check(a, w, trials, rng());
    const double identity = std::abs(r.lhs - r.rhs_at_svd);
    const double excess = r.max_random_rhs - r.lhs;
    worst_identity = std::max(worst_identity, identity);
    worst_excess = std::max(worst_excess, excess);
    if (!(identity <= kTol) || !(excess <= kTol)) {
      res.passed = false;
      res.detail = "instance " + std::to_string(i) + ": " +
                   std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                   " w=" + fmt_vec(w) + " lhs=" + fmt(r.lhs) +
                   " rhs_at_svd=" + fmt(r.rhs_at_svd) +
                   " max_random_rhs=" + fmt(r.max_random_rhs);
      return res;
    }
  }
  if (count == 0) worst_excess = 0.0;
  res.detail = "max |lhs - rhs| = " + fmt_exp(worst_identity) +
               ", max random excess = " + fmt_exp(worst_excess);
  return res;
}

SuiteResult nnm_suite(Rng& rng, std::size_t count) {
  constexpr double kTol = 1e-10;
  SuiteResult res{"nnm-equivalence", true, count, ""};
  std::uniform_int_distribution<std::size_t> rows(1, 6);
  std::uniform_int_distribution<std::size_t> cols(1, 5);
  double worst = 0.0;
  for (std::size_t i = 0; i < count; ++i) {
    const Matrix y = random_uniform_matrix(rng, rows(rng), cols(rng));
    const double top = singular_values(y).front();
    std::uniform_real_distribution<double> lam(0.0, 2.0 * top);
    const double lambda = lam(rng);
    const std::vector<double> w(std::min(y.rows(), y.cols()), lambda);
    const WnnmResult a = nnm_solve(y, lambda);
    const WnnmResult b = wnnm_solve(y, w);
    const double diff = max_abs_diff(a.x_star, b.x_star);
    worst = std::max(worst, diff);
    if (!(diff <= kTol)) {
      res.passed = false;
      res.detail = "instance " + std::to_string(i) + ": lambda=" + fmt(lambda) +
                   " max entry diff=" + fmt_exp(diff) +
                   " nnm objective=" + fmt(a.objective) +
                   " wnnm objective=" + fmt(b.objective);
      return res;
    }
  }
  res.detail = "max entry diff = " + fmt_exp(worst);
  return res;
}

}  // namespace

DiagInstance random_diag_instance(Rng& rng, std::size_t max_n,
                                  double sigma_max) {
  std::uniform_int_distribution<std::size_t> dim(1, max_n);
  DiagInstance inst;
  inst.sigma = random_uniform_vector(rng, dim(rng), 0.0, sigma_max);
  std::sort(inst.sigma.begin(), inst.sigma.end(), std::greater<>());
  inst.w = random_uniform_vector(rng, inst.sigma.size(), 0.0,
                                 2.0 * inst.sigma.front());
  return inst;
}

SelftestReport run_selftest(const SelftestOptions& options) {
  const Counts counts = counts_for(options.scale);
  const GeneralSolver solver =
      options.inject_sign_fault ? GeneralSolver(sign_flipped_pava)
                                : GeneralSolver([](auto s, auto w) {
                                    return pava_solve(s, w);
                                  });

  SelftestReport report;
  if (options.scale != SelftestScale::None) {
    // Each suite draws from its own stream so suites stay reproducible in
    // isolation.
    Rng seeder(options.seed);
    Rng r1(seeder()), r2(seeder()), r3(seeder()), r4(seeder());
    report.suites.push_back(cross_solver_suite(r1, counts.cross_solver, solver));
    report.suites.push_back(oracle_suite(r2, counts.oracle, solver));
    report.suites.push_back(lemma1_suite(r3, counts.lemma1, counts.lemma1_trials));
    report.suites.push_back(nnm_suite(r4, counts.nnm));
  }

  std::size_t passed = 0;
  for (const SuiteResult& s : report.suites) {
    if (s.passed) ++passed;
    report.text += (s.passed ? "PASS " : "FAIL ") + s.name + " (" +
                   std::to_string(s.instances) + " instances): " + s.detail +
                   "\n";
  }
  report.all_passed = passed == report.suites.size();
  report.text += std::to_string(report.suites.size()) + " suites, " +
                 std::to_string(passed) + " passed\n";
  return report;
}

}  // namespace wnnm
