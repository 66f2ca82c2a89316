#include "l11prox/primitives.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>

namespace l11prox {

Threshold::Threshold(double theta) : theta_(theta) {
  if (!(theta >= 0.0)) {
    throw std::invalid_argument("Threshold: theta must be nonnegative, got " +
                                std::to_string(theta));
  }
}

double soft_threshold(double x, Threshold theta) {
  const double magnitude = std::abs(x) - theta.value();
  if (!(magnitude > 0.0)) return 0.0;
  return std::copysign(magnitude, x);
}

std::vector<double> soft_threshold_column(std::span<const double> x, Threshold theta) {
  std::vector<double> out(x.size());
  std::transform(x.begin(), x.end(), out.begin(),
                 [theta](double v) { return soft_threshold(v, theta); });
  return out;
}

std::vector<double> project_simplex(std::span<const double> v) {
  if (v.empty()) throw std::invalid_argument("project_simplex: empty vector");

  std::vector<double> sorted(v.begin(), v.end());
  std::sort(sorted.begin(), sorted.end(), std::greater<>());

  // rho is the last position where the sorted entry stays above the running
  // threshold; the first entry always qualifies.
  double prefix = 0.0;
  double tau = sorted[0] - 1.0;
  for (std::size_t k = 0; k < sorted.size(); ++k) {
    prefix += sorted[k];
    const double candidate = (prefix - 1.0) / static_cast<double>(k + 1);
    if (sorted[k] - candidate > 0.0) tau = candidate;
  }

  std::vector<double> w(v.size());
  std::transform(v.begin(), v.end(), w.begin(),
                 [tau](double vi) { return std::max(vi - tau, 0.0); });
  return w;
}

std::vector<double> prox_linf_vector(std::span<const double> x, double lambda) {
  if (!(lambda > 0.0)) {
    throw std::invalid_argument("prox_linf_vector: lambda must be positive, got " +
                                std::to_string(lambda));
  }
  double l1 = 0.0;
  for (double v : x) l1 += std::abs(v);
  std::vector<double> out(x.size(), 0.0);
  if (l1 <= lambda) return out;

  std::vector<double> scaled(x.size());
  std::transform(x.begin(), x.end(), scaled.begin(),
                 [lambda](double v) { return std::abs(v) / lambda; });
  const std::vector<double> w = project_simplex(scaled);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0.0) continue;
    out[i] = x[i] - lambda * w[i] * (x[i] > 0.0 ? 1.0 : -1.0);
  }
  return out;
}

}  // namespace l11prox
