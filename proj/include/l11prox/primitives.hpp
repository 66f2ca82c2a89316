#pragma once

#include <span>
#include <vector>

namespace l11prox {

/// Nonnegative soft-thresholding level. In the matrix prox this is the
/// product of lambda and a column's dual variable.
class Threshold {
 public:
  /// Throws std::invalid_argument if theta is negative or NaN.
  explicit Threshold(double theta);
  double value() const { return theta_; }

 private:
  double theta_;
};

/// sign(x) * max(|x| - theta, 0). Returns +0.0 when the entry is clipped.
double soft_threshold(double x, Threshold theta);

std::vector<double> soft_threshold_column(std::span<const double> x, Threshold theta);

/// Euclidean projection onto the unit simplex {w >= 0, sum w = 1}, computed
/// exactly by sorting and locating the pivot.
std::vector<double> project_simplex(std::span<const double> v);

/// Prox of lambda * ||.||_inf, via the simplex projection of |x| / lambda.
std::vector<double> prox_linf_vector(std::span<const double> x, double lambda);

}  // namespace l11prox
