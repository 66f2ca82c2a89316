#include "l11prox/core.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace l11prox {

ColumnCache build_column_cache(const Matrix& x) {
  const std::size_t n = x.rows();
  const std::size_t m = x.cols();

  ColumnCache cache{Matrix(n, m), Matrix(n, m), {}, {}, {}, 0.0};
  cache.permutation.resize(m);
  cache.col_norms.resize(m);

  std::vector<std::size_t> order(n);
  for (std::size_t j = 0; j < m; ++j) {
    const auto col = x.column(j);
    std::iota(order.begin(), order.end(), std::size_t{0});
    // stable_sort keeps equal magnitudes in ascending row order.
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return std::abs(col[a]) > std::abs(col[b]);
    });

    auto sorted = cache.sorted_abs.column(j);
    auto partial = cache.cumsum.column(j);
    double running = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      sorted[i] = std::abs(col[order[i]]);
      running += sorted[i];
      partial[i] = running;
    }
    cache.permutation[j] = order;
    cache.col_norms[j] = partial[n - 1];
  }

  cache.norm_order.resize(m);
  std::iota(cache.norm_order.begin(), cache.norm_order.end(), std::size_t{0});
  std::stable_sort(cache.norm_order.begin(), cache.norm_order.end(),
                   [&](std::size_t a, std::size_t b) {
                     return cache.col_norms[a] > cache.col_norms[b];
                   });
  cache.t_max_global = cache.col_norms[cache.norm_order.front()];
  return cache;
}

double l11_norm(const Matrix& x) {
  double best = 0.0;
  for (std::size_t j = 0; j < x.cols(); ++j) {
    double s = 0.0;
    for (double v : x.column(j)) s += std::abs(v);
    best = std::max(best, s);
  }
  return best;
}

double linfinf_norm(const Matrix& x) { return l11_norm(x.transpose()); }

double lambda_max(const Matrix& x) {
  double total = 0.0;
  for (std::size_t j = 0; j < x.cols(); ++j) {
    double col_max = 0.0;
    for (double v : x.column(j)) col_max = std::max(col_max, std::abs(v));
    total += col_max;
  }
  return total;
}

void ProxConfig::validate() const {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) {
    throw std::invalid_argument("ProxConfig: lambda must be positive and finite, got " +
                                std::to_string(lambda));
  }
  if (!(delta > 0.0) || !std::isfinite(delta)) {
    throw std::invalid_argument("ProxConfig: delta must be positive and finite, got " +
                                std::to_string(delta));
  }
  if (max_iters && *max_iters < 1) {
    throw std::invalid_argument("ProxConfig: max_iters must be at least 1");
  }
}

double KktReport::max_residual() const {
  return std::max({primal_feasibility, dual_feasibility, dual_sum_gap,
                   complementary_slackness, stationarity});
}

}  // namespace l11prox
