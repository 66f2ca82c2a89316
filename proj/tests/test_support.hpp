#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <vector>

#include "l11prox/core.hpp"
#include "l11prox/oracle.hpp"
#include "l11prox/random.hpp"

namespace l11prox::testing {

inline const Matrix kWorkedExample{{1, 0.1}, {2, 0.2}, {3, 0.3}};
inline const Matrix kWorkedResult{{0, 0.1}, {0, 0.2}, {0.9, 0.3}};

inline std::vector<std::size_t> random_permutation(std::size_t n, Rng& rng) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), std::size_t{0});
  for (std::size_t i = n; i > 1; --i) std::swap(p[i - 1], p[rng.index(0, i - 1)]);
  return p;
}

/// out(i, j) = x(rows[i], cols[j]).
inline Matrix permute(const Matrix& x, const std::vector<std::size_t>& rows,
                      const std::vector<std::size_t>& cols) {
  Matrix out(x.rows(), x.cols());
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t j = 0; j < x.cols(); ++j) out(i, j) = x(rows[i], cols[j]);
  return out;
}

inline Matrix scaled(const Matrix& x, double c) {
  std::vector<double> d(x.data().begin(), x.data().end());
  for (double& v : d) v *= c;
  return Matrix(x.rows(), x.cols(), std::move(d));
}

inline double column_l1(const Matrix& x, std::size_t j) {
  double s = 0.0;
  for (double v : x.column(j)) s += std::abs(v);
  return s;
}

inline std::size_t expected_iterations(double t_max, double delta) {
  return t_max > delta ? static_cast<std::size_t>(std::ceil(std::log2(t_max / delta))) : 0;
}

}  // namespace l11prox::testing
