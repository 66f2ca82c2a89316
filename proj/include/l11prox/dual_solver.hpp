#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "l11prox/core.hpp"

namespace l11prox {

/// Columns whose l1 norm strictly exceeds a slack value t. Indices are
/// sorted ascending.
struct ActiveSet {
  std::vector<std::size_t> indices;

  bool contains(std::size_t j) const;
  std::size_t size() const { return indices.size(); }
  friend bool operator==(const ActiveSet&, const ActiveSet&) = default;
};

ActiveSet active_set(const ColumnCache& cache, double t);

/// Dual variable of one active column together with the number of entries
/// left unclipped by the threshold lambda * nu.
struct ColumnDual {
  double nu = 0.0;
  std::size_t support_size = 0;
};

/// Solves sum_i [y_i - lambda * nu]^+ = t for nu > 0, given the column's
/// magnitudes y sorted decreasingly and their partial sums z.
///
/// The support size k is the largest i with i * y_i >= z_i - t; the sequence
/// i * y_i - (z_i - t) is nonincreasing in i, so k is found by binary search
/// and nu = (z_k - t) / (k * lambda).
///
/// Throws std::domain_error unless 0 < t < z_n, and std::invalid_argument
/// for a non-positive lambda or mismatched spans.
ColumnDual nu_of_t_column(std::span<const double> sorted_abs, std::span<const double> cumsum,
                          double t, double lambda);

struct DualEval {
  std::vector<double> nu;
  std::vector<std::size_t> support_sizes;
  double sum_nu = 0.0;
};

/// nu(t) for every column: the per-column solution on the active set I(t),
/// zero elsewhere. Throws std::domain_error unless 0 < t < t_max_global.
DualEval nu_vector(const ColumnCache& cache, double t, double lambda);

}  // namespace l11prox
