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


/* C interface to the wnnm solver library.
 *
 * Objects are opaque handles created by the library and released with the
 * matching *_free function. Every fallible call returns a wnnm_status; on
 * failure, wnnm_last_error() describes the problem for the calling thread
 * until its next failing call. Output pointers are only written on success.
 */

#ifndef WNNM_WNNM_H
#define WNNM_WNNM_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(WNNM_BUILDING_LIBRARY)
#    define WNNM_API __declspec(dllexport)
#  else
#    define WNNM_API __declspec(dllimport)
#  endif
#else
#  define WNNM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum wnnm_status {
  WNNM_OK = 0,
  WNNM_ERR_INVALID_INPUT = 1,
  WNNM_ERR_PRECONDITION = 2,
  WNNM_ERR_NUMERICAL = 3,
  WNNM_ERR_CONVERGENCE = 4,
  WNNM_ERR_PARSE = 5,
  WNNM_ERR_IO = 6,
  WNNM_ERR_INTERNAL = 7
} wnnm_status;

typedef enum wnnm_path {
  WNNM_PATH_AUTO = 0,
  WNNM_PATH_CLOSED_FORM = 1,
  WNNM_PATH_PAVA = 2,
  WNNM_PATH_PROJGRAD = 3,
  WNNM_PATH_BRUTE_FORCE = 4
} wnnm_path;

typedef enum wnnm_scale {
  WNNM_SCALE_NONE = 0,
  WNNM_SCALE_SMALL = 1,
  WNNM_SCALE_FULL = 2
} wnnm_scale;

typedef struct wnnm_matrix wnnm_matrix;
typedef struct wnnm_result wnnm_result;
typedef struct wnnm_image wnnm_image;

WNNM_API const char* wnnm_version(void);
WNNM_API const char* wnnm_last_error(void);
WNNM_API const char* wnnm_status_name(wnnm_status status);
WNNM_API const char* wnnm_path_name(wnnm_path path);

/* Matrices (row-major). */
WNNM_API wnnm_status wnnm_matrix_create(size_t rows, size_t cols,
                                        const double* data,
                                        wnnm_matrix** out);
WNNM_API void wnnm_matrix_free(wnnm_matrix* m);
WNNM_API size_t wnnm_matrix_rows(const wnnm_matrix* m);
WNNM_API size_t wnnm_matrix_cols(const wnnm_matrix* m);
WNNM_API const double* wnnm_matrix_data(const wnnm_matrix* m);
WNNM_API wnnm_status wnnm_matrix_read_csv(const char* path, wnnm_matrix** out);
WNNM_API wnnm_status wnnm_matrix_write_csv(const wnnm_matrix* m,
                                           const char* path);

/* Spectral subproblem: min sum (d_i - sigma_i)^2 + w_i d_i over
 * d_1 >= ... >= d_n >= 0. `path` selects the solver; AUTO picks the closed
 * form for non-descending weights and PAVA otherwise. d_out has n slots. */
WNNM_API wnnm_status wnnm_diag_solve(const double* sigma, const double* w,
                                     size_t n, wnnm_path path, double* d_out,
                                     double* objective_out);

/* Full problem: min ||Y - X||_F^2 + sum w_i sigma_i(X). w holds
 * min(rows, cols) weights. `path` may be AUTO, CLOSED_FORM or PAVA. */
WNNM_API wnnm_status wnnm_solve(const wnnm_matrix* y, const double* w,
                                size_t n, wnnm_path path, wnnm_result** out);
WNNM_API wnnm_status wnnm_nnm_solve(const wnnm_matrix* y, double lambda,
                                    wnnm_result** out);
WNNM_API void wnnm_result_free(wnnm_result* r);
/* Borrowed; valid until the result is freed. */
WNNM_API const wnnm_matrix* wnnm_result_x(const wnnm_result* r);
WNNM_API double wnnm_result_objective(const wnnm_result* r);
WNNM_API wnnm_path wnnm_result_path(const wnnm_result* r);
WNNM_API const double* wnnm_result_d(const wnnm_result* r, size_t* n);
WNNM_API const double* wnnm_result_sigma(const wnnm_result* r, size_t* n);

WNNM_API wnnm_status wnnm_objective(const wnnm_matrix* y, const wnnm_matrix* x,
                                    const double* w, size_t n, double* out);

/* Images: 8-bit binary PGM on disk, real-valued gray levels in memory. */
WNNM_API wnnm_status wnnm_image_create(size_t width, size_t height,
                                       const double* pixels, wnnm_image** out);
WNNM_API void wnnm_image_free(wnnm_image* img);
WNNM_API size_t wnnm_image_width(const wnnm_image* img);
WNNM_API size_t wnnm_image_height(const wnnm_image* img);
WNNM_API const double* wnnm_image_pixels(const wnnm_image* img);
WNNM_API wnnm_status wnnm_image_read_pgm(const char* path, wnnm_image** out);
WNNM_API wnnm_status wnnm_image_write_pgm(const wnnm_image* img,
                                          const char* path);
WNNM_API wnnm_status wnnm_psnr(const wnnm_image* a, const wnnm_image* b,
                               double* out);

typedef struct wnnm_denoise_config {
  size_t patch_size;
  size_t group_size;
  size_t search_window;
  size_t stride;
  double noise_sigma;
  double c;
  double epsilon;
  unsigned threads; /* 0 = hardware concurrency */
} wnnm_denoise_config;

typedef struct wnnm_denoise_stats {
  size_t groups;
  double mean_rank;
} wnnm_denoise_stats;

WNNM_API void wnnm_denoise_config_default(wnnm_denoise_config* cfg);
/* stats may be NULL. */
WNNM_API wnnm_status wnnm_denoise(const wnnm_image* img,
                                  const wnnm_denoise_config* cfg,
                                  wnnm_image** out, wnnm_denoise_stats* stats);

/* Runs the built-in verification suites. The report is a NUL-terminated
 * string owned by the caller (release with wnnm_string_free). */
typedef struct wnnm_selftest_options {
  uint64_t seed;
  wnnm_scale scale;
  int inject_sign_fault; /* test hook; nonzero breaks the general solver */
} wnnm_selftest_options;

WNNM_API void wnnm_selftest_options_default(wnnm_selftest_options* opts);
WNNM_API wnnm_status wnnm_selftest(const wnnm_selftest_options* opts,
                                   char** report, int* all_passed);
WNNM_API void wnnm_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* WNNM_WNNM_H */
