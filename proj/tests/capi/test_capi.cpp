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


// Exercises the shared library strictly through its C header.

#include <cmath>
#include <cstdio>
#include <cstring>
#include <string>
#include <vector>

#include "doctest.h"
#include "wnnm/wnnm.h"

TEST_CASE("matrix handles") {
  const double data[] = {3, 0, 0, 1};
  wnnm_matrix* m = nullptr;
  REQUIRE(wnnm_matrix_create(2, 2, data, &m) == WNNM_OK);
  CHECK(wnnm_matrix_rows(m) == 2);
  CHECK(wnnm_matrix_cols(m) == 2);
  CHECK(wnnm_matrix_data(m)[0] == 3.0);
  wnnm_matrix_free(m);

  wnnm_matrix* bad = nullptr;
  const double nan_data[] = {NAN};
  CHECK(wnnm_matrix_create(1, 1, nan_data, &bad) == WNNM_ERR_INVALID_INPUT);
  CHECK(bad == nullptr);
  CHECK(std::string(wnnm_last_error()).find("non-finite") != std::string::npos);
  CHECK(wnnm_matrix_create(0, 1, data, &bad) == WNNM_ERR_INVALID_INPUT);
  wnnm_matrix_free(nullptr);
}

TEST_CASE("solve through the C API") {
  const double data[] = {3, 0, 0, 1};
  wnnm_matrix* y = nullptr;
  REQUIRE(wnnm_matrix_create(2, 2, data, &y) == WNNM_OK);

  const double w[] = {1, 1};
  wnnm_result* r = nullptr;
  REQUIRE(wnnm_solve(y, w, 2, WNNM_PATH_AUTO, &r) == WNNM_OK);
  CHECK(wnnm_result_path(r) == WNNM_PATH_CLOSED_FORM);
  CHECK(wnnm_result_objective(r) == doctest::Approx(3.5));
  const double* x = wnnm_matrix_data(wnnm_result_x(r));
  CHECK(x[0] == doctest::Approx(2.5));
  CHECK(x[3] == doctest::Approx(0.5));
  size_t n = 0;
  const double* d = wnnm_result_d(r, &n);
  REQUIRE(n == 2);
  CHECK(d[0] == doctest::Approx(2.5));
  wnnm_result_free(r);

  const double w_short[] = {1};
  r = nullptr;
  CHECK(wnnm_solve(y, w_short, 1, WNNM_PATH_AUTO, &r) == WNNM_ERR_INVALID_INPUT);
  CHECK(r == nullptr);

  const double w_desc[] = {4, 0};
  CHECK(wnnm_solve(y, w_desc, 2, WNNM_PATH_CLOSED_FORM, &r) ==
        WNNM_ERR_PRECONDITION);
  REQUIRE(wnnm_solve(y, w_desc, 2, WNNM_PATH_AUTO, &r) == WNNM_OK);
  CHECK(wnnm_result_path(r) == WNNM_PATH_PAVA);
  wnnm_result_free(r);

  REQUIRE(wnnm_nnm_solve(y, 1.0, &r) == WNNM_OK);
  CHECK(wnnm_matrix_data(wnnm_result_x(r))[0] == doctest::Approx(2.5));
  wnnm_result_free(r);
  CHECK(wnnm_nnm_solve(y, -1.0, &r) == WNNM_ERR_INVALID_INPUT);

  double obj = 0.0;
  CHECK(wnnm_objective(y, y, w, 2, &obj) == WNNM_OK);
  CHECK(obj == doctest::Approx(4.0));
  wnnm_matrix_free(y);
}

TEST_CASE("diagonal solver paths through the C API") {
  const double sigma[] = {3, 2};
  const double w[] = {4, 0};
  for (wnnm_path p : {WNNM_PATH_AUTO, WNNM_PATH_PAVA, WNNM_PATH_PROJGRAD,
                      WNNM_PATH_BRUTE_FORCE}) {
    double d[2] = {0, 0};
    double obj = 0.0;
    REQUIRE(wnnm_diag_solve(sigma, w, 2, p, d, &obj) == WNNM_OK);
    CHECK(d[0] == doctest::Approx(1.5).epsilon(1e-6));
    CHECK(d[1] == doctest::Approx(1.5).epsilon(1e-6));
    CHECK(obj == doctest::Approx(8.5).epsilon(1e-6));
  }
  double d[2];
  CHECK(wnnm_diag_solve(sigma, w, 2, WNNM_PATH_CLOSED_FORM, d, nullptr) ==
        WNNM_ERR_PRECONDITION);
  CHECK(wnnm_diag_solve(nullptr, nullptr, 0, WNNM_PATH_PAVA, nullptr,
                        nullptr) == WNNM_OK);
}

TEST_CASE("csv and pgm files through the C API") {
  const std::string csv = "capi_test_matrix.csv";
  const double data[] = {0.1, -2, 1e-300, 7};
  wnnm_matrix* m = nullptr;
  REQUIRE(wnnm_matrix_create(2, 2, data, &m) == WNNM_OK);
  REQUIRE(wnnm_matrix_write_csv(m, csv.c_str()) == WNNM_OK);
  wnnm_matrix* back = nullptr;
  REQUIRE(wnnm_matrix_read_csv(csv.c_str(), &back) == WNNM_OK);
  CHECK(std::memcmp(wnnm_matrix_data(back), data, sizeof data) == 0);
  wnnm_matrix_free(m);
  wnnm_matrix_free(back);
  std::remove(csv.c_str());

  CHECK(wnnm_matrix_read_csv("does-not-exist.csv", &m) == WNNM_ERR_IO);

  const std::string pgm = "capi_test_image.pgm";
  std::vector<double> px(16 * 16, 100.0);
  wnnm_image* img = nullptr;
  REQUIRE(wnnm_image_create(16, 16, px.data(), &img) == WNNM_OK);
  REQUIRE(wnnm_image_write_pgm(img, pgm.c_str()) == WNNM_OK);
  wnnm_image* loaded = nullptr;
  REQUIRE(wnnm_image_read_pgm(pgm.c_str(), &loaded) == WNNM_OK);
  double psnr = 0.0;
  REQUIRE(wnnm_psnr(img, loaded, &psnr) == WNNM_OK);
  CHECK(std::isinf(psnr));

  wnnm_denoise_config cfg;
  wnnm_denoise_config_default(&cfg);
  CHECK(cfg.patch_size == 7);
  CHECK(cfg.group_size == 16);
  CHECK(cfg.search_window == 20);
  CHECK(cfg.stride == 3);
  CHECK(cfg.c == doctest::Approx(2.0 * std::sqrt(2.0)));
  cfg.noise_sigma = 5.0;
  wnnm_image* out = nullptr;
  wnnm_denoise_stats stats{};
  REQUIRE(wnnm_denoise(loaded, &cfg, &out, &stats) == WNNM_OK);
  CHECK(stats.groups == 16);
  CHECK(wnnm_image_width(out) == 16);
  wnnm_image_free(out);

  cfg.patch_size = 6;
  CHECK(wnnm_denoise(loaded, &cfg, &out, nullptr) == WNNM_ERR_INVALID_INPUT);

  wnnm_image_free(img);
  wnnm_image_free(loaded);
  std::remove(pgm.c_str());
}

TEST_CASE("selftest through the C API") {
  wnnm_selftest_options opts;
  wnnm_selftest_options_default(&opts);
  CHECK(opts.seed == 42);

  opts.scale = WNNM_SCALE_NONE;
  char* text = nullptr;
  int passed = 0;
  REQUIRE(wnnm_selftest(&opts, &text, &passed) == WNNM_OK);
  CHECK(passed == 1);
  CHECK(std::string(text).find("0 suites") != std::string::npos);
  wnnm_string_free(text);

  opts.scale = WNNM_SCALE_SMALL;
  opts.inject_sign_fault = 1;
  REQUIRE(wnnm_selftest(&opts, &text, &passed) == WNNM_OK);
  CHECK(passed == 0);
  wnnm_string_free(text);
}
