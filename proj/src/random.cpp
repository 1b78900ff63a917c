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


#include "wnnm/random.hpp"

#include <cmath>

namespace wnnm {

Matrix random_uniform_matrix(Rng& rng, std::size_t rows, std::size_t cols,
                             double lo, double hi) {
  std::uniform_real_distribution<double> dist(lo, hi);
  Matrix m(rows, cols);
  for (double& v : m.data()) v = dist(rng);
  return m;
}

Matrix random_orthogonal(Rng& rng, std::size_t n) {
  std::normal_distribution<double> dist(0.0, 1.0);
  // Columns of q are built by modified Gram-Schmidt, applied twice.
  std::vector<std::vector<double>> q;
  q.reserve(n);
  while (q.size() < n) {
    std::vector<double> x(n);
    for (double& v : x) v = dist(rng);
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& b : q) {
        double proj = 0.0;
        for (std::size_t i = 0; i < n; ++i) proj += b[i] * x[i];
        for (std::size_t i = 0; i < n; ++i) x[i] -= proj * b[i];
      }
    }
    double len = 0.0;
    for (double v : x) len += v * v;
    len = std::sqrt(len);
    if (len < 1e-8) continue;
    for (double& v : x) v /= len;
    q.push_back(std::move(x));
  }
  Matrix out(n, n);
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t r = 0; r < n; ++r) out(r, c) = q[c][r];
  return out;
}

Matrix random_low_rank(Rng& rng, std::size_t rows, std::size_t cols,
                       std::size_t rank, double scale) {
  Matrix left = random_uniform_matrix(rng, rows, rank, -scale, scale);
  Matrix right = random_uniform_matrix(rng, rank, cols, -1.0, 1.0);
  return left * right;
}

std::vector<double> random_uniform_vector(Rng& rng, std::size_t n, double lo,
                                          double hi) {
  std::uniform_real_distribution<double> dist(lo, hi);
  std::vector<double> out(n);
  for (double& v : out) v = dist(rng);
  return out;
}

}  // namespace wnnm
