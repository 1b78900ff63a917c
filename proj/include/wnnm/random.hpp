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


#ifndef WNNM_RANDOM_HPP
#define WNNM_RANDOM_HPP

#include <cstddef>
#include <random>
#include <vector>

#include "wnnm/matrix.hpp"

namespace wnnm {

using Rng = std::mt19937_64;

// Entries uniform in [lo, hi).
Matrix random_uniform_matrix(Rng& rng, std::size_t rows, std::size_t cols,
                             double lo = -1.0, double hi = 1.0);

// Haar-distributed n x n orthogonal matrix: Gram-Schmidt applied to
// standard Gaussian columns.
Matrix random_orthogonal(Rng& rng, std::size_t n);

// Random matrix of the given shape with rank at most `rank`.
Matrix random_low_rank(Rng& rng, std::size_t rows, std::size_t cols,
                       std::size_t rank, double scale = 1.0);

std::vector<double> random_uniform_vector(Rng& rng, std::size_t n, double lo,
                                          double hi);

}  // namespace wnnm

#endif  // WNNM_RANDOM_HPP
