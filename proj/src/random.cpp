#include "l11prox/random.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace l11prox {

double Rng::uniform01() { return static_cast<double>(next() >> 11) * 0x1p-53; }

double Rng::uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

double Rng::gaussian() {
  const double u1 = uniform01();
  const double u2 = uniform01();
  return std::sqrt(-2.0 * std::log(1.0 - u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

std::size_t Rng::index(std::size_t lo, std::size_t hi) {
  const auto span = static_cast<double>(hi - lo + 1);
  const auto k = static_cast<std::size_t>(uniform01() * span);
  return lo + std::min(k, hi - lo);
}

Distribution parse_distribution(std::string_view name) {
  if (name == "gaussian") return Distribution::kGaussian;
  if (name == "uniform") return Distribution::kUniform;
  throw std::invalid_argument("unknown distribution '" + std::string(name) +
                              "' (expected gaussian or uniform)");
}

Matrix random_matrix(std::size_t n, std::size_t m, Distribution dist, Rng& rng) {
  std::vector<double> data(n * m);
  for (double& v : data) {
    v = dist == Distribution::kGaussian ? rng.gaussian() : rng.uniform(-1.0, 1.0);
  }
  return Matrix(n, m, std::move(data));
}

void add_index_jitter(Matrix& x, double scale) {
  const auto total = static_cast<double>(x.size());
  for (std::size_t j = 0; j < x.cols(); ++j) {
    for (std::size_t i = 0; i < x.rows(); ++i) {
      const double offset = scale * static_cast<double>(j * x.rows() + i + 1) / total;
      x(i, j) += x(i, j) < 0.0 ? -offset : offset;
    }
  }
}

}  // namespace l11prox
