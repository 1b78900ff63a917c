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


#include "wnnm/denoise.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <string>
#include <thread>

#include "wnnm/error.hpp"
#include "wnnm/operator.hpp"
#include "wnnm/svd.hpp"

namespace wnnm {

void validate(const DenoiseConfig& cfg, const Image& img) {
  if (cfg.patch_size == 0 || cfg.patch_size % 2 == 0)
    throw InvalidInput("denoise: patch_size must be odd and positive");
  if (cfg.group_size == 0)
    throw InvalidInput("denoise: group_size must be positive");
  if (cfg.search_window == 0)
    throw InvalidInput("denoise: search_window must be positive");
  if (cfg.stride == 0) throw InvalidInput("denoise: stride must be positive");
  if (!(cfg.noise_sigma > 0.0) || !std::isfinite(cfg.noise_sigma))
    throw InvalidInput("denoise: noise_sigma must be positive");
  if (!(cfg.c > 0.0) || !std::isfinite(cfg.c))
    throw InvalidInput("denoise: c must be positive");
  if (!(cfg.epsilon > 0.0) || !std::isfinite(cfg.epsilon))
    throw InvalidInput("denoise: epsilon must be positive");
  if (cfg.patch_size > std::min(img.width(), img.height())) {
    throw InvalidInput("denoise: patch_size " + std::to_string(cfg.patch_size) +
                       " exceeds image size " + std::to_string(img.width()) +
                       "x" + std::to_string(img.height()));
  }
}

std::vector<double> patch_vector(const Image& img, PatchPos pos,
                                 std::size_t patch_size) {
  std::vector<double> out;
  out.reserve(patch_size * patch_size);
  for (std::size_t r = 0; r < patch_size; ++r)
    for (std::size_t c = 0; c < patch_size; ++c)
      out.push_back(img.at(pos.row + r, pos.col + c));
  return out;
}

PatchGroup extract_group(const Image& img, PatchPos anchor,
                         const DenoiseConfig& cfg) {
  validate(cfg, img);
  const std::size_t p = cfg.patch_size;
  const std::size_t max_row = img.height() - p;
  const std::size_t max_col = img.width() - p;
  if (anchor.row > max_row || anchor.col > max_col) {
    throw InvalidInput("extract_group: anchor (" + std::to_string(anchor.row) +
                       ", " + std::to_string(anchor.col) +
                       ") does not fit a patch inside the image");
  }

  const std::vector<double> ref = patch_vector(img, anchor, p);
  struct Candidate {
    double dist;
    PatchPos pos;
  };
  std::vector<Candidate> candidates;
  const std::size_t w = cfg.search_window;
  const std::size_t r0 = anchor.row > w ? anchor.row - w : 0;
  const std::size_t c0 = anchor.col > w ? anchor.col - w : 0;
  const std::size_t r1 = std::min(max_row, anchor.row + w);
  const std::size_t c1 = std::min(max_col, anchor.col + w);
  for (std::size_t r = r0; r <= r1; ++r) {
    for (std::size_t c = c0; c <= c1; ++c) {
      if (r == anchor.row && c == anchor.col) continue;
      double dist = 0.0;
      for (std::size_t i = 0; i < p; ++i) {
        for (std::size_t j = 0; j < p; ++j) {
          const double diff = img.at(r + i, c + j) - ref[i * p + j];
          dist += diff * diff;
        }
      }
      candidates.push_back({dist, {r, c}});
    }
  }
  const std::size_t take =
      std::min(cfg.group_size - 1, candidates.size());
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const Candidate& a, const Candidate& b) {
                     return a.dist < b.dist;
                   });

  PatchGroup group;
  group.anchor = anchor;
  group.members.push_back(anchor);
  for (std::size_t i = 0; i < take; ++i)
    group.members.push_back(candidates[i].pos);

  group.matrix = Matrix(p * p, group.members.size());
  for (std::size_t k = 0; k < group.members.size(); ++k) {
    const std::vector<double> v = patch_vector(img, group.members[k], p);
    for (std::size_t i = 0; i < v.size(); ++i) group.matrix(i, k) = v[i];
  }
  return group;
}

std::vector<double> group_weights(const Matrix& group_matrix,
                                  const DenoiseConfig& cfg) {
  if (group_matrix.empty())
    throw InvalidInput("group_weights: empty group matrix");
  const std::vector<double> sigma = singular_values(group_matrix);
  const double k = static_cast<double>(group_matrix.cols());
  const double noise_var = cfg.noise_sigma * cfg.noise_sigma;
  std::vector<double> w(sigma.size());
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    const double clean =
        std::sqrt(std::max(sigma[i] * sigma[i] - k * noise_var, 0.0));
    w[i] = cfg.c * std::sqrt(k) * noise_var / (clean + cfg.epsilon);
  }
  return w;
}

namespace {

struct GroupEstimate {
  std::vector<PatchPos> members;
  Matrix denoised;
  std::size_t rank = 0;
};

GroupEstimate solve_group(const Image& img, PatchPos anchor,
                          const DenoiseConfig& cfg) {
  PatchGroup group = extract_group(img, anchor, cfg);
  const std::vector<double> w = group_weights(group.matrix, cfg);
  if (!is_non_descending(w)) {
    throw NumericalFailure("denoise: group weights are not non-descending", 0);
  }
  WnnmResult result = wnnm_solve(group.matrix, w);
  if (result.path != SolverPath::ClosedForm) {
    throw NumericalFailure("denoise: expected the closed-form path", 0);
  }
  GroupEstimate est;
  est.rank = static_cast<std::size_t>(
      std::count_if(result.d.d.begin(), result.d.d.end(),
                    [](double v) { return v > 0.0; }));
  est.members = std::move(group.members);
  est.denoised = std::move(result.x_star);
  return est;
}

std::string describe(PatchPos anchor) {
  return "anchor (" + std::to_string(anchor.row) + ", " +
         std::to_string(anchor.col) + ")";
}

}  // namespace

DenoiseReport denoise(const Image& img, const DenoiseConfig& cfg) {
  validate(cfg, img);
  const std::size_t p = cfg.patch_size;

  std::vector<PatchPos> anchors;
  for (std::size_t r = 0; r + p <= img.height(); r += cfg.stride)
    for (std::size_t c = 0; c + p <= img.width(); c += cfg.stride)
      anchors.push_back({r, c});

  // Groups are solved independently (possibly in parallel) and then
  // accumulated in anchor order, so the output is the same for any thread
  // count.
  std::vector<GroupEstimate> estimates(anchors.size());
  std::vector<std::exception_ptr> failures(anchors.size());
  auto run = [&](std::size_t i) {
    try {
      estimates[i] = solve_group(img, anchors[i], cfg);
    } catch (...) {
      failures[i] = std::current_exception();
    }
  };

  unsigned threads = cfg.threads == 0 ? std::thread::hardware_concurrency()
                                      : cfg.threads;
  threads = std::max(1u, std::min<unsigned>(
                             threads, static_cast<unsigned>(anchors.size())));
  if (threads <= 1) {
    for (std::size_t i = 0; i < anchors.size(); ++i) run(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < anchors.size(); i = next++) run(i);
      });
    }
  }

  for (std::size_t i = 0; i < anchors.size(); ++i) {
    if (!failures[i]) continue;
    try {
      std::rethrow_exception(failures[i]);
    } catch (const NumericalFailure& e) {
      throw NumericalFailure(describe(anchors[i]) + ": " + e.what(),
                             e.iterations());
    } catch (const Error& e) {
      throw Error(e.code(), describe(anchors[i]) + ": " + e.what());
    }
  }

  std::vector<double> sum(img.pixels().size(), 0.0);
  std::vector<std::size_t> count(img.pixels().size(), 0);
  std::size_t rank_total = 0;
  for (const GroupEstimate& est : estimates) {
    rank_total += est.rank;
    for (std::size_t k = 0; k < est.members.size(); ++k) {
      const PatchPos pos = est.members[k];
      for (std::size_t i = 0; i < p; ++i) {
        for (std::size_t j = 0; j < p; ++j) {
          const std::size_t idx = (pos.row + i) * img.width() + pos.col + j;
          sum[idx] += est.denoised(i * p + j, k);
          ++count[idx];
        }
      }
    }
  }

  DenoiseReport report;
  report.image = img;
  for (std::size_t idx = 0; idx < sum.size(); ++idx) {
    double& out = report.image.pixels()[idx];
    if (count[idx] > 0) out = sum[idx] / static_cast<double>(count[idx]);
    out = std::clamp(out, 0.0, 255.0);
  }
  report.groups = estimates.size();
  report.mean_rank = estimates.empty()
                         ? 0.0
                         : static_cast<double>(rank_total) /
                               static_cast<double>(estimates.size());
  return report;
}

}  // namespace wnnm
