#include "l11prox/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace l11prox {

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {
  validate();
}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<double> column_major)
    : rows_(rows), cols_(cols), data_(std::move(column_major)) {
  if (data_.size() != rows_ * cols_) {
    throw std::invalid_argument("Matrix: data size " + std::to_string(data_.size()) +
                                " does not match shape " + std::to_string(rows_) + "x" +
                                std::to_string(cols_));
  }
  validate();
}

Matrix::Matrix(std::initializer_list<std::initializer_list<double>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  data_.assign(rows_ * cols_, 0.0);
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != cols_) {
      throw std::invalid_argument("Matrix: ragged row " + std::to_string(i));
    }
    std::size_t j = 0;
    for (double v : row) (*this)(i, j++) = v;
    ++i;
  }
  validate();
}

Matrix Matrix::from_rows(const std::vector<std::vector<double>>& rows) {
  const std::size_t n = rows.size();
  const std::size_t m = n == 0 ? 0 : rows.front().size();
  std::vector<double> data(n * m);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != m) {
      throw std::invalid_argument("Matrix: ragged row " + std::to_string(i));
    }
    for (std::size_t j = 0; j < m; ++j) data[j * n + i] = rows[i][j];
  }
  return Matrix(n, m, std::move(data));
}

Matrix Matrix::from_column(std::span<const double> column) {
  return Matrix(column.size(), 1, std::vector<double>(column.begin(), column.end()));
}

Matrix Matrix::from_row(std::span<const double> row) {
  return Matrix(1, row.size(), std::vector<double>(row.begin(), row.end()));
}

Matrix Matrix::transpose() const {
  std::vector<double> out(data_.size());
  for (std::size_t j = 0; j < cols_; ++j) {
    for (std::size_t i = 0; i < rows_; ++i) out[i * cols_ + j] = (*this)(i, j);
  }
  return Matrix(cols_, rows_, std::move(out));
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](double v) { return v == 0.0; });
}

void Matrix::validate() const {
  if (rows_ == 0 || cols_ == 0) {
    throw std::invalid_argument("Matrix: both dimensions must be positive, got " +
                                std::to_string(rows_) + "x" + std::to_string(cols_));
  }
  for (std::size_t k = 0; k < data_.size(); ++k) {
    if (!std::isfinite(data_[k])) {
      throw std::invalid_argument("Matrix: non-finite entry at (" + std::to_string(k % rows_) +
                                  ", " + std::to_string(k / rows_) + ")");
    }
  }
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("max_abs_diff: shape mismatch");
  }
  double worst = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    worst = std::max(worst, std::abs(a.data()[k] - b.data()[k]));
  }
  return worst;
}

}  // namespace l11prox
