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


#ifndef WNNM_CSV_HPP
#define WNNM_CSV_HPP

#include <iosfwd>
#include <string>
#include <string_view>

#include "wnnm/matrix.hpp"

namespace wnnm {

// Plain comma-separated rows, no header; the shape is inferred. Values are
// written in the shortest decimal form that reads back to the same double.

Matrix parse_csv(std::string_view text);
Matrix read_csv(const std::string& path);

std::string format_csv(const Matrix& m);
void write_csv(const Matrix& m, const std::string& path);

// Shortest round-trip decimal representation of a double.
std::string format_double(double v);

}  // namespace wnnm

#endif  // WNNM_CSV_HPP
