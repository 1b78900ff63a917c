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


#include <cmath>
#include <limits>

#include "doctest.h"
#include "wnnm/error.hpp"
#include "wnnm/matrix.hpp"

using wnnm::Matrix;

TEST_CASE("gram_defect") {
  CHECK(wnnm::gram_defect(Matrix::identity(3)) == 0.0);
  // (2I)^T (2I) - I = 3I
  CHECK(wnnm::gram_defect(2.0 * Matrix::identity(2)) ==
        doctest::Approx(3.0 * std::sqrt(2.0)).epsilon(1e-15));
  CHECK(wnnm::gram_defect(Matrix(2, 1, {1.0, 0.0})) == 0.0);
}

TEST_CASE("construction rejects bad entries") {
  CHECK_THROWS_AS(Matrix(2, 2, {1.0, 2.0, 3.0}), wnnm::InvalidInput);
  CHECK_THROWS_AS(
      Matrix(1, 2, {1.0, std::numeric_limits<double>::quiet_NaN()}),
      wnnm::InvalidInput);
  CHECK_THROWS_AS(
      Matrix(1, 1, {std::numeric_limits<double>::infinity()}),
      wnnm::InvalidInput);
}

TEST_CASE("arithmetic") {
  const Matrix a(2, 3, {1, 2, 3, 4, 5, 6});
  const Matrix b(3, 2, {1, 0, 0, 1, 1, 1});
  CHECK(a * b == Matrix(2, 2, {4, 5, 10, 11}));
  CHECK(a.transposed().transposed() == a);
  CHECK(a - a == Matrix(2, 3));
  CHECK(a + a == 2.0 * a);
  CHECK_THROWS_AS(a * a, wnnm::InvalidInput);
  CHECK_THROWS_AS(a - b, wnnm::InvalidInput);
  CHECK(wnnm::frobenius_norm(Matrix(1, 2, {3, 4})) == doctest::Approx(5.0));
  CHECK(Matrix::diagonal(3, 2, std::vector<double>{1, 2}) ==
        Matrix(3, 2, {1, 0, 0, 2, 0, 0}));
}
