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


#ifndef WNNM_SVD_HPP
#define WNNM_SVD_HPP

#include <span>
#include <vector>

#include "wnnm/matrix.hpp"

namespace wnnm {

// Thin SVD y = u * diag(sigma) * v^T with k = min(rows, cols):
//   u     rows x k, orthonormal columns
//   sigma k entries, non-increasing, nonnegative
//   v     cols x k, orthonormal columns
// Each column of u has its largest-magnitude entry nonnegative (first one
// wins on ties); the matching column of v is flipped along with it.
struct SvdFactors {
  Matrix u;
  std::vector<double> sigma;
  Matrix v;
};

struct SvdOptions {
  int max_sweeps = 100;
};

// One-sided (Hestenes) Jacobi. Inputs with rows < cols are transposed,
// decomposed, and the factors swapped back.
//
// Throws InvalidInput for empty or non-finite input and NumericalFailure
// when the sweep budget is exhausted.
SvdFactors svd(const Matrix& y, const SvdOptions& options = {});

// Singular values only; same algorithm.
std::vector<double> singular_values(const Matrix& y);

// u * diag(d) * v^T. Throws InvalidInput when d has the wrong length or a
// negative entry.
Matrix reconstruct(const SvdFactors& f, std::span<const double> d);

}  // namespace wnnm

#endif  // WNNM_SVD_HPP
