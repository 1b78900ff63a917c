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


// Command-line front end. Talks to the library only through the C API.
//
// Exit codes: 0 success, 1 selftest failure, 2 input error, 3 numerical error.

#include <charconv>
#include <cstdio>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "wnnm/wnnm.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitSelftestFailed = 1;
constexpr int kExitInput = 2;
constexpr int kExitNumerical = 3;

struct MatrixDeleter {
  void operator()(wnnm_matrix* m) const { wnnm_matrix_free(m); }
};
struct ResultDeleter {
  void operator()(wnnm_result* r) const { wnnm_result_free(r); }
};
struct ImageDeleter {
  void operator()(wnnm_image* i) const { wnnm_image_free(i); }
};
using MatrixPtr = std::unique_ptr<wnnm_matrix, MatrixDeleter>;
using ResultPtr = std::unique_ptr<wnnm_result, ResultDeleter>;
using ImagePtr = std::unique_ptr<wnnm_image, ImageDeleter>;

int exit_code_for(wnnm_status s) {
  switch (s) {
    case WNNM_OK:
      return kExitOk;
    case WNNM_ERR_INVALID_INPUT:
    case WNNM_ERR_PARSE:
    case WNNM_ERR_IO:
      return kExitInput;
    default:
      return kExitNumerical;
  }
}

int report(wnnm_status s) {
  std::cerr << "error (" << wnnm_status_name(s) << "): " << wnnm_last_error()
            << "\n";
  return exit_code_for(s);
}

std::string shortest(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return ec == std::errc() ? std::string(buf, ptr) : std::string("?");
}

std::string join(const double* v, std::size_t n) {
  std::string out;
  for (std::size_t i = 0; i < n; ++i) {
    if (i > 0) out += ',';
    out += shortest(v[i]);
  }
  return out;
}

struct SolveArgs {
  std::string matrix;
  std::string weights;
  std::optional<double> lambda;
  std::string out;
  std::string force_path;
};

int cmd_solve(const SolveArgs& a, bool verbose) {
  wnnm_matrix* raw = nullptr;
  if (auto s = wnnm_matrix_read_csv(a.matrix.c_str(), &raw); s != WNNM_OK)
    return report(s);
  MatrixPtr y(raw);
  const std::size_t k =
      std::min(wnnm_matrix_rows(y.get()), wnnm_matrix_cols(y.get()));

  wnnm_path path = WNNM_PATH_AUTO;
  if (a.force_path == "closed") path = WNNM_PATH_CLOSED_FORM;
  if (a.force_path == "pava") path = WNNM_PATH_PAVA;

  wnnm_result* raw_result = nullptr;
  wnnm_status status = WNNM_OK;
  if (a.lambda) {
    if (path == WNNM_PATH_AUTO) {
      status = wnnm_nnm_solve(y.get(), *a.lambda, &raw_result);
    } else {
      const std::vector<double> w(k, *a.lambda);
      status = wnnm_solve(y.get(), w.data(), w.size(), path, &raw_result);
    }
  } else {
    wnnm_matrix* wraw = nullptr;
    if (auto s = wnnm_matrix_read_csv(a.weights.c_str(), &wraw); s != WNNM_OK)
      return report(s);
    MatrixPtr wm(wraw);
    if (wnnm_matrix_rows(wm.get()) != 1) {
      std::cerr << "error: weights file must hold a single row\n";
      return kExitInput;
    }
    const std::size_t n = wnnm_matrix_cols(wm.get());
    if (n != k) {
      std::cerr << "error: expected " << k
                << " weights (one per singular value), got " << n << "\n";
      return kExitInput;
    }
    status = wnnm_solve(y.get(), wnnm_matrix_data(wm.get()), n, path,
                        &raw_result);
  }
  if (status != WNNM_OK) return report(status);
  ResultPtr result(raw_result);

  if (auto s = wnnm_matrix_write_csv(wnnm_result_x(result.get()), a.out.c_str());
      s != WNNM_OK)
    return report(s);

  std::size_t n = 0;
  const double* d = wnnm_result_d(result.get(), &n);
  std::cout << "objective: " << shortest(wnnm_result_objective(result.get()))
            << "\n";
  std::cout << "path: " << wnnm_path_name(wnnm_result_path(result.get()))
            << "\n";
  std::cout << "d: " << join(d, n) << "\n";
  if (verbose) {
    const double* sigma = wnnm_result_sigma(result.get(), &n);
    std::cout << "sigma: " << join(sigma, n) << "\n";
  }
  return kExitOk;
}

struct DenoiseArgs {
  std::string in;
  std::string out;
  std::string reference;
  wnnm_denoise_config cfg{};
};

int cmd_denoise(const DenoiseArgs& a, bool verbose) {
  wnnm_image* raw = nullptr;
  if (auto s = wnnm_image_read_pgm(a.in.c_str(), &raw); s != WNNM_OK)
    return report(s);
  ImagePtr input(raw);

  wnnm_image* raw_out = nullptr;
  wnnm_denoise_stats stats{};
  if (auto s = wnnm_denoise(input.get(), &a.cfg, &raw_out, &stats);
      s != WNNM_OK)
    return report(s);
  ImagePtr output(raw_out);
  if (auto s = wnnm_image_write_pgm(output.get(), a.out.c_str()); s != WNNM_OK)
    return report(s);

  std::printf("groups processed: %zu\n", stats.groups);
  std::printf("mean group rank: %.4f\n", stats.mean_rank);
  if (verbose) {
    std::printf("image: %zux%zu\n", wnnm_image_width(input.get()),
                wnnm_image_height(input.get()));
  }
  if (!a.reference.empty()) {
    wnnm_image* raw_ref = nullptr;
    if (auto s = wnnm_image_read_pgm(a.reference.c_str(), &raw_ref);
        s != WNNM_OK)
      return report(s);
    ImagePtr ref(raw_ref);
    double before = 0.0;
    double after = 0.0;
    if (auto s = wnnm_psnr(input.get(), ref.get(), &before); s != WNNM_OK)
      return report(s);
    if (auto s = wnnm_psnr(output.get(), ref.get(), &after); s != WNNM_OK)
      return report(s);
    std::printf("psnr input: %.4f dB\n", before);
    std::printf("psnr output: %.4f dB\n", after);
    std::printf("psnr gain: %.4f dB\n", after - before);
  }
  return kExitOk;
}

int cmd_selftest(std::uint64_t seed, const std::string& scale) {
  wnnm_selftest_options opts;
  wnnm_selftest_options_default(&opts);
  opts.seed = seed;
  if (scale == "small") {
    opts.scale = WNNM_SCALE_SMALL;
  } else if (scale == "full") {
    opts.scale = WNNM_SCALE_FULL;
  } else {
    opts.scale = WNNM_SCALE_NONE;
  }
  char* text = nullptr;
  int passed = 0;
  if (auto s = wnnm_selftest(&opts, &text, &passed); s != WNNM_OK)
    return report(s);
  std::fputs(text, stdout);
  wnnm_string_free(text);
  return passed ? kExitOk : kExitSelftestFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weighted nuclear norm minimization solver"};
  app.require_subcommand(1);
  bool verbose = false;
  app.add_flag("-v,--verbose", verbose, "Print extra diagnostics");

  SolveArgs solve;
  auto* solve_cmd = app.add_subcommand(
      "solve", "Solve min ||Y - X||_F^2 + sum w_i sigma_i(X) for a CSV matrix");
  solve_cmd->add_option("--matrix", solve.matrix, "Input matrix (CSV)")
      ->required();
  auto* weights_opt = solve_cmd->add_option(
      "--weights", solve.weights, "One-line CSV of weights, one per singular value");
  auto* lambda_opt = solve_cmd->add_option(
      "--lambda", solve.lambda, "Uniform weight for every singular value");
  weights_opt->excludes(lambda_opt);
  solve_cmd->add_option("--out", solve.out, "Output matrix (CSV)")->required();
  solve_cmd->add_option("--force-path", solve.force_path,
                        "Force the diagonal solver")
      ->check(CLI::IsMember({"closed", "pava"}));

  DenoiseArgs dn;
  wnnm_denoise_config_default(&dn.cfg);
  auto* denoise_cmd =
      app.add_subcommand("denoise", "Patch-group denoising of a PGM image");
  denoise_cmd->add_option("--in", dn.in, "Input image (binary PGM)")
      ->required();
  denoise_cmd->add_option("--out", dn.out, "Output image (binary PGM)")
      ->required();
  denoise_cmd->add_option("--sigma", dn.cfg.noise_sigma, "Noise level")
      ->required();
  denoise_cmd->add_option("--patch", dn.cfg.patch_size, "Patch side (odd)")->capture_default_str();
  denoise_cmd->add_option("--group", dn.cfg.group_size, "Patches per group")->capture_default_str();
  denoise_cmd->add_option("--window", dn.cfg.search_window,
                          "Search window radius")->capture_default_str();
  denoise_cmd->add_option("--stride", dn.cfg.stride, "Anchor grid spacing")->capture_default_str();
  denoise_cmd->add_option("--c", dn.cfg.c, "Weight constant")->capture_default_str();
  denoise_cmd->add_option("--threads", dn.cfg.threads,
                          "Worker threads (0 = all cores)")->capture_default_str();
  denoise_cmd->add_option("--reference", dn.reference,
                          "Clean image; prints PSNR before and after");

  std::uint64_t seed = 42;
  std::string scale = "small";
  auto* selftest_cmd =
      app.add_subcommand("selftest", "Run the built-in verification suites");
  selftest_cmd->add_option("--seed", seed, "Random seed")->capture_default_str();
  selftest_cmd->add_option("--scale", scale, "small, full, or 0 to run nothing")->capture_default_str()
      ->check(CLI::IsMember({"small", "full", "0", "none"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  if (*solve_cmd) {
    if (!*weights_opt && !*lambda_opt) {
      std::cerr << "error: one of --weights or --lambda is required\n";
      return kExitInput;
    }
    return cmd_solve(solve, verbose);
  }
  if (*denoise_cmd) return cmd_denoise(dn, verbose);
  return cmd_selftest(seed, scale);
}
