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


#ifndef WNNM_TESTS_FIXTURES_HPP
#define WNNM_TESTS_FIXTURES_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

#include "wnnm/image.hpp"

namespace wnnm::testing {

// Rank-1 image: a vertical stripe profile scaled by a slow vertical ramp.
inline Image stripe_image(std::size_t size = 64) {
  Image img(size, size);
  for (std::size_t r = 0; r < size; ++r) {
    const double row_gain =
        0.6 + 0.4 * std::sin(2.0 * std::numbers::pi * static_cast<double>(r) / 48.0);
    for (std::size_t c = 0; c < size; ++c) {
      const double stripe =
          0.5 + 0.45 * std::cos(2.0 * std::numbers::pi * static_cast<double>(c) / 16.0);
      img.at(r, c) = 230.0 * row_gain * stripe;
    }
  }
  return img;
}

// Additive Gaussian noise, clipped back into [0, 255].
inline Image add_noise(const Image& clean, double sigma, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> noise(0.0, sigma);
  Image out = clean;
  for (double& p : out.pixels()) p = std::clamp(p + noise(rng), 0.0, 255.0);
  return out;
}

}  // namespace wnnm::testing

#endif  // WNNM_TESTS_FIXTURES_HPP
