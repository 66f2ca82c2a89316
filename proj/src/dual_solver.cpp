#include "l11prox/dual_solver.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace l11prox {

namespace {

// i * y_i - (z_i - t) with a 1-based i. Its sign matches that of
// y_i - lambda * nu(t, i), the quantity whose last nonnegative index is the
// support size.
double support_gap(std::span<const double> y, std::span<const double> z, double t,
                   std::size_t i0) {
  return static_cast<double>(i0 + 1) * y[i0] - (z[i0] - t);
}

#ifndef NDEBUG
bool support_gaps_nonincreasing(std::span<const double> y, std::span<const double> z, double t) {
  const double slack = 64.0 * std::numeric_limits<double>::epsilon() * (z.back() + t);
  for (std::size_t i = 0; i + 1 < y.size(); ++i) {
    if (support_gap(y, z, t, i + 1) > support_gap(y, z, t, i) + slack) return false;
  }
  return true;
}
#endif

}  // namespace

bool ActiveSet::contains(std::size_t j) const {
  return std::binary_search(indices.begin(), indices.end(), j);
}

ActiveSet active_set(const ColumnCache& cache, double t) {
  ActiveSet out;
  for (std::size_t j = 0; j < cache.cols(); ++j) {
    if (cache.col_norms[j] > t) out.indices.push_back(j);
  }
  return out;
}

ColumnDual nu_of_t_column(std::span<const double> sorted_abs, std::span<const double> cumsum,
                          double t, double lambda) {
  if (sorted_abs.size() != cumsum.size() || sorted_abs.empty()) {
    throw std::invalid_argument("nu_of_t_column: sorted_abs and cumsum must be nonempty and "
                                "of equal length");
  }
  if (!(lambda > 0.0)) {
    throw std::invalid_argument("nu_of_t_column: lambda must be positive");
  }
  if (!(t > 0.0) || !(cumsum.back() > t)) {
    throw std::domain_error("nu_of_t_column: column is not active at t = " + std::to_string(t) +
                            " (norm " + std::to_string(cumsum.back()) + ")");
  }
  assert(support_gaps_nonincreasing(sorted_abs, cumsum, t));

  // The gap at i = 1 equals t > 0, so the search starts past the first entry.
  const std::size_t n = sorted_abs.size();
  std::size_t lo = 1;
  std::size_t hi = n;
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (support_gap(sorted_abs, cumsum, t, mid) >= 0.0) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  const std::size_t k = lo;  // count of unclipped entries
  const double nu = (cumsum[k - 1] - t) / (static_cast<double>(k) * lambda);
  assert(nu > 0.0);
  return {nu, k};
}

DualEval nu_vector(const ColumnCache& cache, double t, double lambda) {
  if (!(t > 0.0) || !(t < cache.t_max_global)) {
    throw std::domain_error("nu_vector: t = " + std::to_string(t) + " outside (0, " +
                            std::to_string(cache.t_max_global) + ")");
  }
  const std::size_t m = cache.cols();
  DualEval out{std::vector<double>(m, 0.0), std::vector<std::size_t>(m, 0), 0.0};
  for (std::size_t j = 0; j < m; ++j) {
    if (!(cache.col_norms[j] > t)) continue;
    const ColumnDual d =
        nu_of_t_column(cache.sorted_abs.column(j), cache.cumsum.column(j), t, lambda);
    out.nu[j] = d.nu;
    out.support_sizes[j] = d.support_size;
  }
  for (double v : out.nu) out.sum_nu += v;
  return out;
}

}  // namespace l11prox
