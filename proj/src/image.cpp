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


#include "wnnm/image.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "wnnm/error.hpp"

namespace wnnm {

Image::Image(std::size_t width, std::size_t height, double fill)
    : width_(width), height_(height), pixels_(width * height, fill) {
  if (width == 0 || height == 0)
    throw InvalidInput("image: width and height must be positive");
  if (!std::isfinite(fill)) throw InvalidInput("image: non-finite fill");
}

Image::Image(std::size_t width, std::size_t height, std::vector<double> pixels)
    : width_(width), height_(height), pixels_(std::move(pixels)) {
  if (width == 0 || height == 0)
    throw InvalidInput("image: width and height must be positive");
  if (pixels_.size() != width * height) {
    throw InvalidInput("image: expected " + std::to_string(width * height) +
                       " pixels, got " + std::to_string(pixels_.size()));
  }
  for (double p : pixels_)
    if (!std::isfinite(p)) throw InvalidInput("image: non-finite pixel");
}

namespace {

class HeaderReader {
 public:
  explicit HeaderReader(std::string_view bytes) : bytes_(bytes) {}

  void skip_space_and_comments() {
    while (pos_ < bytes_.size()) {
      const char c = bytes_[pos_];
      if (c == '#') {
        while (pos_ < bytes_.size() && bytes_[pos_] != '\n') ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else {
        return;
      }
    }
  }

  std::size_t read_uint(const char* what) {
    skip_space_and_comments();
    if (pos_ >= bytes_.size())
      throw ParseError(std::string("pgm: truncated header before ") + what);
    if (!std::isdigit(static_cast<unsigned char>(bytes_[pos_])))
      throw ParseError(std::string("pgm: expected ") + what);
    std::size_t value = 0;
    while (pos_ < bytes_.size() &&
           std::isdigit(static_cast<unsigned char>(bytes_[pos_]))) {
      value = value * 10 + static_cast<std::size_t>(bytes_[pos_] - '0');
      if (value > (1u << 24))
        throw ParseError(std::string("pgm: ") + what + " too large");
      ++pos_;
    }
    return value;
  }

  std::size_t pos() const { return pos_; }
  void advance(std::size_t n) { pos_ += n; }

 private:
  std::string_view bytes_;
  std::size_t pos_ = 0;
};

}  // namespace

Image parse_pgm(std::string_view bytes) {
  if (bytes.size() < 2 || bytes[0] != 'P' || bytes[1] != '5')
    throw ParseError("pgm: missing P5 magic number");
  HeaderReader reader(bytes);
  reader.advance(2);
  const std::size_t width = reader.read_uint("width");
  const std::size_t height = reader.read_uint("height");
  const std::size_t maxval = reader.read_uint("maxval");
  if (width == 0 || height == 0) throw ParseError("pgm: zero dimension");
  if (maxval != 255)
    throw ParseError("pgm: only maxval 255 is supported, got " +
                     std::to_string(maxval));
  // Exactly one whitespace byte separates the header from the raster.
  if (reader.pos() >= bytes.size() ||
      !std::isspace(static_cast<unsigned char>(bytes[reader.pos()])))
    throw ParseError("pgm: truncated header");
  reader.advance(1);

  const std::size_t count = width * height;
  if (bytes.size() - reader.pos() < count) {
    throw ParseError("pgm: truncated raster, expected " +
                     std::to_string(count) + " bytes, found " +
                     std::to_string(bytes.size() - reader.pos()));
  }
  std::vector<double> pixels(count);
  for (std::size_t i = 0; i < count; ++i)
    pixels[i] = static_cast<unsigned char>(bytes[reader.pos() + i]);
  return Image(width, height, std::move(pixels));
}

Image read_pgm(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_pgm(buf.str());
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

std::string format_pgm(const Image& img) {
  std::string out = "P5\n" + std::to_string(img.width()) + " " +
                    std::to_string(img.height()) + "\n255\n";
  out.reserve(out.size() + img.pixels().size());
  for (double p : img.pixels()) {
    const double v = std::clamp(std::round(p), 0.0, 255.0);
    out.push_back(static_cast<char>(static_cast<unsigned char>(v)));
  }
  return out;
}

void write_pgm(const Image& img, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << format_pgm(img);
  if (!out) throw IoError("write to '" + path + "' failed");
}

double psnr(const Image& a, const Image& b) {
  if (a.width() != b.width() || a.height() != b.height()) {
    throw InvalidInput("psnr: images differ in size (" +
                       std::to_string(a.width()) + "x" +
                       std::to_string(a.height()) + " vs " +
                       std::to_string(b.width()) + "x" +
                       std::to_string(b.height()) + ")");
  }
  double sse = 0.0;
  for (std::size_t i = 0; i < a.pixels().size(); ++i) {
    const double diff = a.pixels()[i] - b.pixels()[i];
    sse += diff * diff;
  }
  if (sse == 0.0) return std::numeric_limits<double>::infinity();
  const double mse = sse / static_cast<double>(a.pixels().size());
  return 10.0 * std::log10(255.0 * 255.0 / mse);
}

}  // namespace wnnm
