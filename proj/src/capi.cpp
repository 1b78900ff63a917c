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


#include "wnnm/wnnm.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <new>
#include <span>
#include <string>
#include <vector>

#include "wnnm/csv.hpp"
#include "wnnm/denoise.hpp"
#include "wnnm/diag_solver.hpp"
#include "wnnm/error.hpp"
#include "wnnm/image.hpp"
#include "wnnm/operator.hpp"
#include "wnnm/selftest.hpp"

struct wnnm_matrix {
  wnnm::Matrix value;
};

struct wnnm_result {
  wnnm::WnnmResult value;
  wnnm_matrix x;
};

struct wnnm_image {
  wnnm::Image value;
};

namespace {

thread_local std::string last_error;

wnnm_status to_status(wnnm::ErrorCode code) {
  switch (code) {
    case wnnm::ErrorCode::InvalidInput:
      return WNNM_ERR_INVALID_INPUT;
    case wnnm::ErrorCode::PreconditionViolation:
      return WNNM_ERR_PRECONDITION;
    case wnnm::ErrorCode::NumericalFailure:
      return WNNM_ERR_NUMERICAL;
    case wnnm::ErrorCode::ConvergenceFailure:
      return WNNM_ERR_CONVERGENCE;
    case wnnm::ErrorCode::ParseError:
      return WNNM_ERR_PARSE;
    case wnnm::ErrorCode::IoError:
      return WNNM_ERR_IO;
  }
  return WNNM_ERR_INTERNAL;
}

wnnm_status fail(wnnm_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

// Runs `body`, translating exceptions into status codes.
template <class F>
wnnm_status guarded(F&& body) {
  try {
    body();
    return WNNM_OK;
  } catch (const wnnm::Error& e) {
    return fail(to_status(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(WNNM_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(WNNM_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(WNNM_ERR_INTERNAL, "unknown error");
  }
}

wnnm_path to_c(wnnm::SolverPath p) {
  switch (p) {
    case wnnm::SolverPath::ClosedForm:
      return WNNM_PATH_CLOSED_FORM;
    case wnnm::SolverPath::Pava:
      return WNNM_PATH_PAVA;
    case wnnm::SolverPath::ProjGrad:
      return WNNM_PATH_PROJGRAD;
    case wnnm::SolverPath::BruteForce:
      return WNNM_PATH_BRUTE_FORCE;
  }
  return WNNM_PATH_AUTO;
}

#define WNNM_REQUIRE(cond, msg) \
  if (!(cond)) return fail(WNNM_ERR_INVALID_INPUT, msg)

}  // namespace

extern "C" {

const char* wnnm_version(void) { return "1.0.0"; }

const char* wnnm_last_error(void) { return last_error.c_str(); }

const char* wnnm_status_name(wnnm_status status) {
  switch (status) {
    case WNNM_OK:
      return "ok";
    case WNNM_ERR_INVALID_INPUT:
      return "invalid input";
    case WNNM_ERR_PRECONDITION:
      return "precondition violation";
    case WNNM_ERR_NUMERICAL:
      return "numerical failure";
    case WNNM_ERR_CONVERGENCE:
      return "convergence failure";
    case WNNM_ERR_PARSE:
      return "parse error";
    case WNNM_ERR_IO:
      return "i/o error";
    case WNNM_ERR_INTERNAL:
      return "internal error";
  }
  return "unknown status";
}

const char* wnnm_path_name(wnnm_path path) {
  switch (path) {
    case WNNM_PATH_AUTO:
      return "auto";
    case WNNM_PATH_CLOSED_FORM:
      return "closed-form";
    case WNNM_PATH_PAVA:
      return "pava";
    case WNNM_PATH_PROJGRAD:
      return "projgrad";
    case WNNM_PATH_BRUTE_FORCE:
      return "brute-force";
  }
  return "unknown";
}

wnnm_status wnnm_matrix_create(size_t rows, size_t cols, const double* data,
                               wnnm_matrix** out) {
  WNNM_REQUIRE(out != nullptr, "wnnm_matrix_create: out is null");
  WNNM_REQUIRE(rows > 0 && cols > 0,
               "wnnm_matrix_create: rows and cols must be positive");
  WNNM_REQUIRE(data != nullptr, "wnnm_matrix_create: data is null");
  return guarded([&] {
    std::vector<double> entries(data, data + rows * cols);
    *out = new wnnm_matrix{wnnm::Matrix(rows, cols, std::move(entries))};
  });
}

void wnnm_matrix_free(wnnm_matrix* m) { delete m; }

size_t wnnm_matrix_rows(const wnnm_matrix* m) {
  return m ? m->value.rows() : 0;
}

size_t wnnm_matrix_cols(const wnnm_matrix* m) {
  return m ? m->value.cols() : 0;
}

const double* wnnm_matrix_data(const wnnm_matrix* m) {
  return m ? m->value.data().data() : nullptr;
}

wnnm_status wnnm_matrix_read_csv(const char* path, wnnm_matrix** out) {
  WNNM_REQUIRE(path != nullptr && out != nullptr,
               "wnnm_matrix_read_csv: null argument");
  return guarded([&] { *out = new wnnm_matrix{wnnm::read_csv(path)}; });
}

wnnm_status wnnm_matrix_write_csv(const wnnm_matrix* m, const char* path) {
  WNNM_REQUIRE(m != nullptr && path != nullptr,
               "wnnm_matrix_write_csv: null argument");
  return guarded([&] { wnnm::write_csv(m->value, path); });
}

wnnm_status wnnm_diag_solve(const double* sigma, const double* w, size_t n,
                            wnnm_path path, double* d_out,
                            double* objective_out) {
  WNNM_REQUIRE(n == 0 || (sigma != nullptr && w != nullptr && d_out != nullptr),
               "wnnm_diag_solve: null argument");
  return guarded([&] {
    const std::span<const double> s(sigma, n);
    const std::span<const double> ws(w, n);
    wnnm::DiagSolution sol;
    switch (path) {
      case WNNM_PATH_AUTO:
        sol = wnnm::is_non_descending(ws) ? wnnm::closed_form(s, ws)
                                          : wnnm::pava_solve(s, ws);
        break;
      case WNNM_PATH_CLOSED_FORM:
        sol = wnnm::closed_form(s, ws);
        break;
      case WNNM_PATH_PAVA:
        sol = wnnm::pava_solve(s, ws);
        break;
      case WNNM_PATH_PROJGRAD:
        sol = wnnm::projgrad_reference(s, ws);
        break;
      case WNNM_PATH_BRUTE_FORCE:
        sol = wnnm::brute_force_oracle(s, ws, 1e-3);
        break;
      default:
        throw wnnm::InvalidInput("wnnm_diag_solve: unknown path");
    }
    std::copy(sol.d.begin(), sol.d.end(), d_out);
    if (objective_out) *objective_out = sol.objective;
  });
}

wnnm_status wnnm_solve(const wnnm_matrix* y, const double* w, size_t n,
                       wnnm_path path, wnnm_result** out) {
  WNNM_REQUIRE(y != nullptr && out != nullptr, "wnnm_solve: null argument");
  WNNM_REQUIRE(n == 0 || w != nullptr, "wnnm_solve: weights are null");
  return guarded([&] {
    wnnm::SolverOptions opts;
    switch (path) {
      case WNNM_PATH_AUTO:
        opts.path = wnnm::PathChoice::Auto;
        break;
      case WNNM_PATH_CLOSED_FORM:
        opts.path = wnnm::PathChoice::ClosedForm;
        break;
      case WNNM_PATH_PAVA:
        opts.path = wnnm::PathChoice::Pava;
        break;
      default:
        throw wnnm::InvalidInput(
            "wnnm_solve: path must be auto, closed-form or pava");
    }
    auto result = wnnm::wnnm_solve(y->value, std::span<const double>(w, n), opts);
    wnnm::Matrix x = result.x_star;
    *out = new wnnm_result{std::move(result), wnnm_matrix{std::move(x)}};
  });
}

wnnm_status wnnm_nnm_solve(const wnnm_matrix* y, double lambda,
                           wnnm_result** out) {
  WNNM_REQUIRE(y != nullptr && out != nullptr, "wnnm_nnm_solve: null argument");
  return guarded([&] {
    auto result = wnnm::nnm_solve(y->value, lambda);
    wnnm::Matrix x = result.x_star;
    *out = new wnnm_result{std::move(result), wnnm_matrix{std::move(x)}};
  });
}

void wnnm_result_free(wnnm_result* r) { delete r; }

const wnnm_matrix* wnnm_result_x(const wnnm_result* r) {
  return r ? &r->x : nullptr;
}

double wnnm_result_objective(const wnnm_result* r) {
  return r ? r->value.objective : 0.0;
}

wnnm_path wnnm_result_path(const wnnm_result* r) {
  return r ? to_c(r->value.path) : WNNM_PATH_AUTO;
}

const double* wnnm_result_d(const wnnm_result* r, size_t* n) {
  if (!r) return nullptr;
  if (n) *n = r->value.d.d.size();
  return r->value.d.d.data();
}

const double* wnnm_result_sigma(const wnnm_result* r, size_t* n) {
  if (!r) return nullptr;
  if (n) *n = r->value.factors.sigma.size();
  return r->value.factors.sigma.data();
}

wnnm_status wnnm_objective(const wnnm_matrix* y, const wnnm_matrix* x,
                           const double* w, size_t n, double* out) {
  WNNM_REQUIRE(y != nullptr && x != nullptr && out != nullptr,
               "wnnm_objective: null argument");
  WNNM_REQUIRE(n == 0 || w != nullptr, "wnnm_objective: weights are null");
  return guarded([&] {
    *out = wnnm::objective_full(y->value, x->value,
                                std::span<const double>(w, n));
  });
}

wnnm_status wnnm_image_create(size_t width, size_t height,
                              const double* pixels, wnnm_image** out) {
  WNNM_REQUIRE(out != nullptr && pixels != nullptr,
               "wnnm_image_create: null argument");
  return guarded([&] {
    std::vector<double> px(pixels, pixels + width * height);
    *out = new wnnm_image{wnnm::Image(width, height, std::move(px))};
  });
}

void wnnm_image_free(wnnm_image* img) { delete img; }

size_t wnnm_image_width(const wnnm_image* img) {
  return img ? img->value.width() : 0;
}

size_t wnnm_image_height(const wnnm_image* img) {
  return img ? img->value.height() : 0;
}

const double* wnnm_image_pixels(const wnnm_image* img) {
  return img ? img->value.pixels().data() : nullptr;
}

wnnm_status wnnm_image_read_pgm(const char* path, wnnm_image** out) {
  WNNM_REQUIRE(path != nullptr && out != nullptr,
               "wnnm_image_read_pgm: null argument");
  return guarded([&] { *out = new wnnm_image{wnnm::read_pgm(path)}; });
}

wnnm_status wnnm_image_write_pgm(const wnnm_image* img, const char* path) {
  WNNM_REQUIRE(img != nullptr && path != nullptr,
               "wnnm_image_write_pgm: null argument");
  return guarded([&] { wnnm::write_pgm(img->value, path); });
}

wnnm_status wnnm_psnr(const wnnm_image* a, const wnnm_image* b, double* out) {
  WNNM_REQUIRE(a != nullptr && b != nullptr && out != nullptr,
               "wnnm_psnr: null argument");
  return guarded([&] { *out = wnnm::psnr(a->value, b->value); });
}

void wnnm_denoise_config_default(wnnm_denoise_config* cfg) {
  if (!cfg) return;
  const wnnm::DenoiseConfig d;
  cfg->patch_size = d.patch_size;
  cfg->group_size = d.group_size;
  cfg->search_window = d.search_window;
  cfg->stride = d.stride;
  cfg->noise_sigma = d.noise_sigma;
  cfg->c = d.c;
  cfg->epsilon = d.epsilon;
  cfg->threads = d.threads;
}

wnnm_status wnnm_denoise(const wnnm_image* img, const wnnm_denoise_config* cfg,
                         wnnm_image** out, wnnm_denoise_stats* stats) {
  WNNM_REQUIRE(img != nullptr && cfg != nullptr && out != nullptr,
               "wnnm_denoise: null argument");
  return guarded([&] {
    wnnm::DenoiseConfig c;
    c.patch_size = cfg->patch_size;
    c.group_size = cfg->group_size;
    c.search_window = cfg->search_window;
    c.stride = cfg->stride;
    c.noise_sigma = cfg->noise_sigma;
    c.c = cfg->c;
    c.epsilon = cfg->epsilon;
    c.threads = cfg->threads;
    wnnm::DenoiseReport report = wnnm::denoise(img->value, c);
    if (stats) {
      stats->groups = report.groups;
      stats->mean_rank = report.mean_rank;
    }
    *out = new wnnm_image{std::move(report.image)};
  });
}

void wnnm_selftest_options_default(wnnm_selftest_options* opts) {
  if (!opts) return;
  const wnnm::SelftestOptions d;
  opts->seed = d.seed;
  opts->scale = WNNM_SCALE_SMALL;
  opts->inject_sign_fault = 0;
}

wnnm_status wnnm_selftest(const wnnm_selftest_options* opts, char** report,
                          int* all_passed) {
  WNNM_REQUIRE(opts != nullptr && report != nullptr,
               "wnnm_selftest: null argument");
  return guarded([&] {
    wnnm::SelftestOptions o;
    o.seed = opts->seed;
    switch (opts->scale) {
      case WNNM_SCALE_NONE:
        o.scale = wnnm::SelftestScale::None;
        break;
      case WNNM_SCALE_SMALL:
        o.scale = wnnm::SelftestScale::Small;
        break;
      case WNNM_SCALE_FULL:
        o.scale = wnnm::SelftestScale::Full;
        break;
      default:
        throw wnnm::InvalidInput("wnnm_selftest: unknown scale");
    }
    o.inject_sign_fault = opts->inject_sign_fault != 0;
    const wnnm::SelftestReport r = wnnm::run_selftest(o);
    char* buf = static_cast<char*>(std::malloc(r.text.size() + 1));
    if (!buf) throw std::bad_alloc();
    std::memcpy(buf, r.text.c_str(), r.text.size() + 1);
    *report = buf;
    if (all_passed) *all_passed = r.all_passed ? 1 : 0;
  });
}

void wnnm_string_free(char* s) { std::free(s); }

}  // extern "C"
