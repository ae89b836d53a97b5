// Copyright 2026 The nbwalk Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "nbwalk/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "nbwalk/error.hpp"

namespace nbwalk {
namespace {

void require_same_shape(const Matrix& a, const Matrix& b, const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorCode::DimensionMismatch,
                std::string(what) + ": " + std::to_string(a.rows()) + "x" +
                    std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) + "x" +
                    std::to_string(b.cols()));
  }
}

}  // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols, double fill)
    : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

Matrix::Matrix(std::initializer_list<std::initializer_list<double>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) {
      throw Error(ErrorCode::DimensionMismatch, "ragged initializer list");
    }
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::diagonal(std::span<const double> values) {
  Matrix m(values.size(), values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return m;
}

std::vector<double> Matrix::column(std::size_t c) const {
  std::vector<double> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix Matrix::block(std::size_t row0, std::size_t col0, std::size_t rows,
                     std::size_t cols) const {
  if (row0 + rows > rows_ || col0 + cols > cols_) {
    throw Error(ErrorCode::DimensionMismatch, "block outside matrix");
  }
  Matrix b(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) b(r, c) = (*this)(row0 + r, col0 + c);
  return b;
}

std::vector<double> Matrix::row_sums() const {
  std::vector<double> sums(rows_, 0.0);
  for (std::size_t r = 0; r < rows_; ++r)
    for (double v : row(r)) sums[r] += v;
  return sums;
}

std::vector<double> Matrix::column_sums() const {
  std::vector<double> sums(cols_, 0.0);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) sums[c] += (*this)(r, c);
  return sums;
}

double Matrix::max_abs() const noexcept {
  double best = 0.0;
  for (double v : data_) best = std::max(best, std::abs(v));
  return best;
}

bool Matrix::all_finite() const noexcept {
  return std::all_of(data_.begin(), data_.end(), [](double v) { return std::isfinite(v); });
}

Matrix& Matrix::operator+=(const Matrix& other) {
  require_same_shape(*this, other, "matrix addition");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& other) {
  require_same_shape(*this, other, "matrix subtraction");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

Matrix& Matrix::operator*=(double scale) noexcept {
  for (double& v : data_) v *= scale;
  return *this;
}

Matrix operator+(Matrix lhs, const Matrix& rhs) { return lhs += rhs; }
Matrix operator-(Matrix lhs, const Matrix& rhs) { return lhs -= rhs; }
Matrix operator*(double scale, Matrix m) { return m *= scale; }

Matrix operator*(const Matrix& lhs, const Matrix& rhs) {
  if (lhs.cols() != rhs.rows()) {
    throw Error(ErrorCode::DimensionMismatch,
                "matrix product " + std::to_string(lhs.rows()) + "x" +
                    std::to_string(lhs.cols()) + " * " + std::to_string(rhs.rows()) + "x" +
                    std::to_string(rhs.cols()));
  }
  Matrix out(lhs.rows(), rhs.cols());
  for (std::size_t i = 0; i < lhs.rows(); ++i) {
    auto out_row = out.row(i);
    for (std::size_t k = 0; k < lhs.cols(); ++k) {
      const double a = lhs(i, k);
      if (a == 0.0) continue;
      auto rhs_row = rhs.row(k);
      for (std::size_t j = 0; j < rhs.cols(); ++j) out_row[j] += a * rhs_row[j];
    }
  }
  return out;
}

std::vector<double> left_multiply(std::span<const double> x, const Matrix& m) {
  if (x.size() != m.rows()) {
    throw Error(ErrorCode::DimensionMismatch, "row vector length != matrix rows");
  }
  std::vector<double> out(m.cols(), 0.0);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (x[r] == 0.0) continue;
    auto row = m.row(r);
    for (std::size_t c = 0; c < m.cols(); ++c) out[c] += x[r] * row[c];
  }
  return out;
}

std::vector<double> operator*(const Matrix& m, std::span<const double> x) {
  if (x.size() != m.cols()) {
    throw Error(ErrorCode::DimensionMismatch, "vector length != matrix cols");
  }
  std::vector<double> out(m.rows(), 0.0);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    auto row = m.row(r);
    double acc = 0.0;
    for (std::size_t c = 0; c < m.cols(); ++c) acc += row[c] * x[c];
    out[r] = acc;
  }
  return out;
}

double max_abs_diff(const Matrix& lhs, const Matrix& rhs) {
  require_same_shape(lhs, rhs, "max_abs_diff");
  double best = 0.0;
  auto a = lhs.data();
  auto b = rhs.data();
  for (std::size_t i = 0; i < a.size(); ++i) best = std::max(best, std::abs(a[i] - b[i]));
  return best;
}

Matrix hconcat(const Matrix& lhs, const Matrix& rhs) {
  if (lhs.rows() != rhs.rows()) {
    throw Error(ErrorCode::DimensionMismatch, "hconcat row counts differ");
  }
  Matrix out(lhs.rows(), lhs.cols() + rhs.cols());
  for (std::size_t r = 0; r < lhs.rows(); ++r) {
    for (std::size_t c = 0; c < lhs.cols(); ++c) out(r, c) = lhs(r, c);
    for (std::size_t c = 0; c < rhs.cols(); ++c) out(r, lhs.cols() + c) = rhs(r, c);
  }
  return out;
}

}  // namespace nbwalk
