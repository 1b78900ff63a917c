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


#ifndef WNNM_MATRIX_HPP
#define WNNM_MATRIX_HPP

#include <cstddef>
#include <span>
#include <vector>

namespace wnnm {

// Dense real matrix stored row-major. Entries are always finite; every
// constructor and factory checks this.
class Matrix {
 public:
  Matrix() = default;
  // Zero matrix of the given shape.
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::size_t rows, std::size_t cols, std::vector<double> entries);

  static Matrix identity(std::size_t n);
  static Matrix diagonal(std::span<const double> diag);
  // rows x cols with `diag` on the leading diagonal.
  static Matrix diagonal(std::size_t rows, std::size_t cols,
                         std::span<const double> diag);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }

  double& operator()(std::size_t r, std::size_t c) {
    return entries_[r * cols_ + c];
  }
  double operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }

  std::span<const double> data() const noexcept { return entries_; }
  std::span<double> data() noexcept { return entries_; }

  Matrix transposed() const;
  std::vector<double> column(std::size_t c) const;

  bool all_finite() const noexcept;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> entries_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(double s, const Matrix& a);

double frobenius_norm(const Matrix& m);
double max_abs_diff(const Matrix& a, const Matrix& b);

// ||m^T m - I||_F; zero exactly when the columns of m are orthonormal.
double gram_defect(const Matrix& m);

}  // namespace wnnm

#endif  // WNNM_MATRIX_HPP
