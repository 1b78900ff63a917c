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


#ifndef WNNM_IMAGE_HPP
#define WNNM_IMAGE_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace wnnm {

// Grayscale image, row-major, gray levels nominally in [0, 255].
class Image {
 public:
  Image() = default;
  Image(std::size_t width, std::size_t height, double fill = 0.0);
  Image(std::size_t width, std::size_t height, std::vector<double> pixels);

  std::size_t width() const noexcept { return width_; }
  std::size_t height() const noexcept { return height_; }

  double& at(std::size_t row, std::size_t col) {
    return pixels_[row * width_ + col];
  }
  double at(std::size_t row, std::size_t col) const {
    return pixels_[row * width_ + col];
  }

  const std::vector<double>& pixels() const noexcept { return pixels_; }
  std::vector<double>& pixels() noexcept { return pixels_; }

 private:
  std::size_t width_ = 0;
  std::size_t height_ = 0;
  std::vector<double> pixels_;
};

// Binary PGM (P5) with maxval 255. Header comments are accepted on read.
Image parse_pgm(std::string_view bytes);
Image read_pgm(const std::string& path);

// Pixels are clamped to [0, 255] and rounded to the nearest integer.
std::string format_pgm(const Image& img);
void write_pgm(const Image& img, const std::string& path);

// 10 log10(255^2 / MSE); +infinity when the images are identical.
double psnr(const Image& a, const Image& b);

}  // namespace wnnm

#endif  // WNNM_IMAGE_HPP
