#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace l11prox {

/// Dense real matrix stored column-major, so that a column is a contiguous
/// span. Every entry is finite; construction rejects NaN and Inf.
class Matrix {
 public:
  /// Zero matrix of the given shape. Both dimensions must be at least 1.
  Matrix(std::size_t rows, std::size_t cols);

  /// Takes ownership of column-major data of size rows * cols.
  Matrix(std::size_t rows, std::size_t cols, std::vector<double> column_major);

  /// Row-major nested list, convenient for literals: {{1, 0.1}, {2, 0.2}}.
  Matrix(std::initializer_list<std::initializer_list<double>> rows);

  static Matrix from_rows(const std::vector<std::vector<double>>& rows);
  static Matrix from_column(std::span<const double> column);
  static Matrix from_row(std::span<const double> row);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t size() const { return data_.size(); }

  double operator()(std::size_t i, std::size_t j) const { return data_[j * rows_ + i]; }

  /// Unchecked write access. Callers must keep entries finite.
  double& operator()(std::size_t i, std::size_t j) { return data_[j * rows_ + i]; }

  std::span<const double> column(std::size_t j) const {
    return {data_.data() + j * rows_, rows_};
  }
  std::span<double> column(std::size_t j) { return {data_.data() + j * rows_, rows_}; }

  std::span<const double> data() const { return data_; }

  Matrix transpose() const;

  bool is_zero() const;

  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  void validate() const;

  std::size_t rows_;
  std::size_t cols_;
  std::vector<double> data_;
};

/// Largest elementwise absolute difference. Shapes must agree.
double max_abs_diff(const Matrix& a, const Matrix& b);

}  // namespace l11prox
