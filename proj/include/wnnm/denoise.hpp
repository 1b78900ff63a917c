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


#ifndef WNNM_DENOISE_HPP
#define WNNM_DENOISE_HPP

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include "wnnm/image.hpp"
#include "wnnm/matrix.hpp"

namespace wnnm {

// Patch-group denoising demo built on wnnm_solve. The weight rule below is a
// demo choice that always yields non-descending weights, so every group is
// solved by the closed form.

struct PatchPos {
  std::size_t row = 0;  // top-left corner
  std::size_t col = 0;

  friend bool operator==(const PatchPos&, const PatchPos&) = default;
};

struct DenoiseConfig {
  std::size_t patch_size = 7;      // odd
  std::size_t group_size = 16;     // patches per group, anchor included
  std::size_t search_window = 20;  // max row/col offset of a candidate
  std::size_t stride = 3;          // spacing of anchor grid
  double noise_sigma = 20.0;
  double c = 2.0 * std::sqrt(2.0);
  double epsilon = 1e-16;
  // Worker threads for the per-group solves; 0 means hardware concurrency.
  // Output does not depend on this value.
  unsigned threads = 1;
};

// Throws InvalidInput for non-positive fields, an even patch size, or a
// patch larger than the image.
void validate(const DenoiseConfig& cfg, const Image& img);

struct PatchGroup {
  PatchPos anchor;
  std::vector<PatchPos> members;  // members[0] == anchor
  Matrix matrix;                  // patch_size^2 x members.size()
};

// Row-major vectorization of the patch with top-left corner `pos`.
std::vector<double> patch_vector(const Image& img, PatchPos pos,
                                 std::size_t patch_size);

// Collects the group_size patches closest (Euclidean) to the anchor patch
// among all patches whose corner lies within search_window of the anchor's.
// Distance ties keep raster scan order; the anchor always comes first.
PatchGroup extract_group(const Image& img, PatchPos anchor,
                         const DenoiseConfig& cfg);

// w_i = c sqrt(k) noise^2 / (s_i + eps) with k the column count and
// s_i = sqrt(max(sigma_i^2 - k noise^2, 0)) an estimate of the clean singular
// value.
std::vector<double> group_weights(const Matrix& group_matrix,
                                  const DenoiseConfig& cfg);

struct DenoiseReport {
  Image image;
  std::size_t groups = 0;
  double mean_rank = 0.0;  // mean count of nonzero singular values kept
};

// Anchors lie on a stride grid clipped so every patch fits. Overlapping
// estimates are averaged; pixels no group covers keep their input value.
DenoiseReport denoise(const Image& img, const DenoiseConfig& cfg);

}  // namespace wnnm

#endif  // WNNM_DENOISE_HPP
