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


#include <string>

#include "doctest.h"
#include "wnnm/selftest.hpp"

TEST_CASE("scale none runs nothing") {
  const auto r = wnnm::run_selftest({.seed = 1, .scale = wnnm::SelftestScale::None});
  CHECK(r.suites.empty());
  CHECK(r.all_passed);
  CHECK(r.text.find("0 suites") != std::string::npos);
}

TEST_CASE("small scale passes and is repeatable") {
  const wnnm::SelftestOptions opts{.seed = 42, .scale = wnnm::SelftestScale::Small};
  const auto a = wnnm::run_selftest(opts);
  const auto b = wnnm::run_selftest(opts);
  CHECK(a.all_passed);
  CHECK(a.suites.size() == 4);
  CHECK(a.text == b.text);
}

TEST_CASE("an injected sign fault is caught with a counterexample") {
  const auto r = wnnm::run_selftest({.seed = 42,
                                     .scale = wnnm::SelftestScale::Small,
                                     .inject_sign_fault = true});
  CHECK_FALSE(r.all_passed);
  CHECK(r.text.find("FAIL cross-solver") != std::string::npos);
  CHECK(r.text.find("sigma=") != std::string::npos);
}
