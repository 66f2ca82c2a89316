#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "l11prox/matrix.hpp"

namespace l11prox {

/// Per-column sorted magnitudes and partial sums of a matrix X, computed once
/// and shared by every bisection step.
///
/// Column j of `sorted_abs` holds |X_j| in decreasing order (ties broken by
/// original row index, ascending); `permutation[j][i]` is the row of X that
/// landed at position i. `cumsum(i, j)` is the sum of the first i+1 sorted
/// magnitudes, so `cumsum(n-1, j)` is the column l1 norm.
struct ColumnCache {
  Matrix sorted_abs;
  Matrix cumsum;
  std::vector<std::vector<std::size_t>> permutation;
  std::vector<double> col_norms;
  /// Column indices ordered by decreasing l1 norm, ties by index.
  std::vector<std::size_t> norm_order;
  double t_max_global = 0.0;

  std::size_t rows() const { return sorted_abs.rows(); }
  std::size_t cols() const { return sorted_abs.cols(); }
};

ColumnCache build_column_cache(const Matrix& x);

/// Induced l1 norm: the largest column l1 norm.
double l11_norm(const Matrix& x);

/// Induced l-infinity norm: the largest row l1 norm.
double linfinf_norm(const Matrix& x);

/// Sum over columns of the largest absolute entry. This is the dual norm of
/// the induced l1 norm and the smallest lambda for which the prox is zero.
double lambda_max(const Matrix& x);

inline constexpr double kDefaultDelta = 1e-8;

struct ProxConfig {
  double lambda = 1.0;
  /// Absolute tolerance on the slack variable t.
  double delta = kDefaultDelta;
  /// Bisection iteration cap. Unset means ceil(log2(t_max / delta)) + 8.
  std::optional<std::size_t> max_iters;

  /// Throws std::invalid_argument on a non-positive or non-finite field.
  void validate() const;
};

struct ProxSolution {
  Matrix u;
  double t = 0.0;
  std::vector<double> nu;
  /// Sorted column indices (0-based).
  std::vector<std::size_t> active_set;
  std::size_t iterations = 0;
  bool active_set_certified = false;
  std::pair<double, double> t_interval{0.0, 0.0};
};

/// Violations of the optimality system of the slack formulation.
struct KktReport {
  double primal_feasibility = 0.0;       // max_j (|U_j|_1 - t)^+
  double dual_feasibility = 0.0;         // max_j (-nu_j)^+
  double dual_sum_gap = 0.0;             // |sum_j nu_j - 1|
  double complementary_slackness = 0.0;  // max_j nu_j |t - |U_j|_1|
  double stationarity = 0.0;             // max_ij |u_ij - S_{lambda nu_j}(x_ij)|

  double max_residual() const;
};

}  // namespace l11prox
