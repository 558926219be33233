/*
 * Copyright 2026 The ador Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef ADOR_MATRIX_H_
#define ADOR_MATRIX_H_

#include <cstddef>
#include <span>
#include <vector>

namespace ador {

// Dense row-major matrix of doubles. The batch container for every network
// input, output and gradient in the library.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0);
  // Takes ownership of `data`, which must hold rows * cols values.
  Matrix(std::size_t rows, std::size_t cols, std::vector<double> data);

  // n x 1 matrix holding `values`.
  static Matrix Column(std::span<const double> values);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t size() const { return data_.size(); }
  bool empty() const { return data_.empty(); }

  double& operator()(std::size_t r, std::size_t c) {
    return data_[r * cols_ + c];
  }
  double operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  std::span<double> row(std::size_t r) {
    return {data_.data() + r * cols_, cols_};
  }
  std::span<const double> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }

  std::span<double> values() { return data_; }
  std::span<const double> values() const { return data_; }

  // Copy of column c.
  std::vector<double> column(std::size_t c) const;

  bool AllFinite() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

// Elementwise sum; shapes must agree.
Matrix Add(const Matrix& a, const Matrix& b);
// a (n x k) times b (k x m).
Matrix Multiply(const Matrix& a, const Matrix& b);
Matrix Transpose(const Matrix& a);
// Rows of `a` in the order given by `indices`.
Matrix SelectRows(const Matrix& a, std::span<const std::size_t> indices);
// [a | b] for matrices with equal row counts.
Matrix ConcatColumns(const Matrix& a, const Matrix& b);

}  // namespace ador

#endif  // ADOR_MATRIX_H_
