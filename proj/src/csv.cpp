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


#include "wnnm/csv.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <vector>

#include "wnnm/error.hpp"

namespace wnnm {

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) {
      lines.push_back(text.substr(start));
      break;
    }
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  auto blank = [](std::string_view l) {
    for (char c : l)
      if (!is_space(c)) return false;
    return true;
  };
  while (!lines.empty() && blank(lines.back())) lines.pop_back();
  return lines;
}

}  // namespace

Matrix parse_csv(std::string_view text) {
  const auto lines = split_lines(text);
  if (lines.empty()) throw ParseError("csv: no data", 1, 1);

  std::vector<double> entries;
  std::size_t cols = 0;
  for (std::size_t li = 0; li < lines.size(); ++li) {
    const std::string_view line = lines[li];
    const std::size_t line_no = li + 1;
    std::size_t count = 0;
    std::size_t pos = 0;
    while (true) {
      const std::size_t comma = line.find(',', pos);
      const std::size_t field_end =
          comma == std::string_view::npos ? line.size() : comma;
      std::size_t b = pos;
      std::size_t e = field_end;
      while (b < e && is_space(line[b])) ++b;
      while (e > b && is_space(line[e - 1])) --e;
      if (b == e) throw ParseError("csv: empty field", line_no, b + 1);

      const char* first = line.data() + b;
      const char* last = line.data() + e;
      if (*first == '+') ++first;
      double value = 0.0;
      const auto [ptr, ec] = std::from_chars(first, last, value);
      if (ec != std::errc() || ptr != last) {
        throw ParseError("csv: cannot parse '" +
                             std::string(line.substr(b, e - b)) +
                             "' as a number",
                         line_no, b + 1);
      }
      if (!std::isfinite(value))
        throw ParseError("csv: non-finite value", line_no, b + 1);
      entries.push_back(value);
      ++count;
      if (comma == std::string_view::npos) break;
      pos = comma + 1;
    }
    if (li == 0) {
      cols = count;
    } else if (count != cols) {
      throw ParseError("csv: expected " + std::to_string(cols) +
                           " fields, found " + std::to_string(count),
                       line_no, 1);
    }
  }
  return Matrix(lines.size(), cols, std::move(entries));
}

Matrix read_csv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_csv(buf.str());
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

std::string format_double(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  if (ec != std::errc()) throw InvalidInput("format_double: conversion failed");
  return std::string(buf, ptr);
}

std::string format_csv(const Matrix& m) {
  std::string out;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c > 0) out += ',';
      out += format_double(m(r, c));
    }
    out += '\n';
  }
  return out;
}

void write_csv(const Matrix& m, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << format_csv(m);
  if (!out) throw IoError("write to '" + path + "' failed");
}

}  // namespace wnnm
