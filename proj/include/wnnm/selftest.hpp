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


#ifndef WNNM_SELFTEST_HPP
#define WNNM_SELFTEST_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "wnnm/random.hpp"

namespace wnnm {

enum class SelftestScale { None, Small, Full };

struct SelftestOptions {
  std::uint64_t seed = 42;
  SelftestScale scale = SelftestScale::Small;
  // Test hook: flips the sign of the weight term in the general solver's
  // targets so the harness can prove it detects a wrong solver.
  bool inject_sign_fault = false;
};

struct SuiteResult {
  std::string name;
  bool passed = true;
  std::size_t instances = 0;
  std::string detail;  // summary statistic, or the first counterexample
};

struct SelftestReport {
  std::vector<SuiteResult> suites;
  bool all_passed = true;
  std::string text;  // one line per suite plus a summary line
};

// Runs the cross-solver, oracle, trace-identity and NNM-equivalence suites.
// Output is a pure function of the options.
SelftestReport run_selftest(const SelftestOptions& options);

// Random instance of the spectral subproblem: n uniform in [1, max_n],
// sigma sorted non-increasing from uniform [0, sigma_max), weights uniform
// in [0, 2 sigma_1].
struct DiagInstance {
  std::vector<double> sigma;
  std::vector<double> w;
};
DiagInstance random_diag_instance(Rng& rng, std::size_t max_n,
                                  double sigma_max = 3.0);

}  // namespace wnnm

#endif  // WNNM_SELFTEST_HPP
