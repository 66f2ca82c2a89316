#include "l11prox/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <string>

namespace l11prox::oracle {

namespace {

struct SortedColumn {
  std::vector<double> y;  // |x| decreasing
  std::vector<double> z;  // partial sums of y
};

double shrink(double v, double level) {
  const double mag = std::abs(v) - level;
  return mag > 0.0 ? std::copysign(mag, v) : 0.0;
}

double column_l1(std::span<const double> col) {
  double s = 0.0;
  for (double v : col) s += std::abs(v);
  return s;
}

// Largest violation of the optimality system for a candidate (U, t, nu).
double kkt_violation(const Matrix& x, double lambda, const Matrix& u, double t,
                     const std::vector<double>& nu) {
  double worst = 0.0;
  double nu_sum = 0.0;
  for (std::size_t j = 0; j < x.cols(); ++j) {
    const double norm = column_l1(u.column(j));
    nu_sum += nu[j];
    worst = std::max({worst, norm - t, -nu[j], nu[j] * std::abs(t - norm)});
    for (std::size_t i = 0; i < x.rows(); ++i) {
      worst = std::max(worst, std::abs(u(i, j) - shrink(x(i, j), lambda * nu[j])));
    }
  }
  return std::max(worst, std::abs(nu_sum - 1.0));
}

}  // namespace

double prox_objective(const Matrix& u, const Matrix& x, double lambda) {
  double worst_col = 0.0;
  double sq = 0.0;
  for (std::size_t j = 0; j < u.cols(); ++j) {
    worst_col = std::max(worst_col, column_l1(u.column(j)));
    for (std::size_t i = 0; i < u.rows(); ++i) {
      const double d = u(i, j) - x(i, j);
      sq += d * d;
    }
  }
  return worst_col + sq / (2.0 * lambda);
}

OracleSolution exhaustive_kkt_solve(const Matrix& x, double lambda) {
  const std::size_t n = x.rows();
  const std::size_t m = x.cols();
  if (n > kMaxOracleDim || m > kMaxOracleDim) {
    throw std::invalid_argument("exhaustive_kkt_solve: instance " + std::to_string(n) + "x" +
                                std::to_string(m) + " exceeds the oracle limit of " +
                                std::to_string(kMaxOracleDim));
  }
  if (!(lambda > 0.0)) throw std::invalid_argument("exhaustive_kkt_solve: lambda must be > 0");

  std::vector<SortedColumn> cols(m);
  double scale = 1.0;
  double dual_norm = 0.0;
  for (std::size_t j = 0; j < m; ++j) {
    auto& c = cols[j];
    for (double v : x.column(j)) c.y.push_back(std::abs(v));
    std::sort(c.y.begin(), c.y.end(), std::greater<>());
    double running = 0.0;
    for (double v : c.y) c.z.push_back(running += v);
    scale = std::max(scale, c.z.back());
    dual_norm += c.y.front();
  }
  const double slack = 1e-12 * scale;

  OracleSolution best{Matrix(n, m), 0.0, std::vector<double>(m, 0.0), false, 0};
  bool found = false;
  auto accept = [&](Matrix u, double t, std::vector<double> nu) {
    if (found) {
      if (max_abs_diff(u, best.u) > 1e-10) {
        throw OracleError("exhaustive_kkt_solve: several distinct candidates satisfy the "
                          "optimality system; the input likely has ties");
      }
      return;
    }
    best.u = std::move(u);
    best.t = t;
    best.nu = std::move(nu);
    found = true;
  };

  // support[j] == 0 marks column j inactive; the all-zero tuple is the
  // all-clipped candidate.
  std::vector<std::size_t> support(m, 0);
  std::size_t examined = 0;
  while (true) {
    ++examined;
    const bool any_active =
        std::any_of(support.begin(), support.end(), [](std::size_t k) { return k > 0; });

    if (!any_active) {
      if (lambda >= dual_norm) {
        std::vector<double> nu(m, 0.0);
        if (dual_norm > 0.0) {
          for (std::size_t j = 0; j < m; ++j) nu[j] = cols[j].y.front() / dual_norm;
        }
        accept(Matrix(n, m), 0.0, std::move(nu));
      }
    } else {
      double a = 0.0;
      double b = 0.0;
      for (std::size_t j = 0; j < m; ++j) {
        if (support[j] == 0) continue;
        const double k = static_cast<double>(support[j]);
        a += cols[j].z[support[j] - 1] / k;
        b += 1.0 / k;
      }
      const double t = (a - lambda) / b;

      bool ok = t > 0.0;
      std::vector<double> nu(m, 0.0);
      for (std::size_t j = 0; ok && j < m; ++j) {
        const auto& c = cols[j];
        const std::size_t k = support[j];
        if (k == 0) {
          ok = c.z.back() <= t + slack;
          continue;
        }
        nu[j] = (c.z[k - 1] - t) / (static_cast<double>(k) * lambda);
        const double level = lambda * nu[j];
        ok = nu[j] > 0.0 && c.y[k - 1] > level - slack && (k == n || c.y[k] <= level + slack);
      }
      if (ok) {
        Matrix u = x;
        for (std::size_t j = 0; j < m; ++j) {
          if (support[j] == 0) continue;
          for (auto& v : u.column(j)) v = shrink(v, lambda * nu[j]);
        }
        accept(std::move(u), t, std::move(nu));
      }
    }

    // Next tuple in {0..n}^m, odometer order.
    std::size_t pos = 0;
    while (pos < m && support[pos] == n) support[pos++] = 0;
    if (pos == m) break;
    ++support[pos];
  }

  best.candidates = examined;
  if (!found) {
    throw OracleError("exhaustive_kkt_solve: no candidate satisfies the optimality system");
  }
  best.verified = kkt_violation(x, lambda, best.u, best.t, best.nu) <= 1e-12 * scale;
  if (!best.verified) {
    throw OracleError("exhaustive_kkt_solve: selected candidate fails the optimality check");
  }
  return best;
}

Matrix subgradient_solve(const Matrix& x, double lambda, std::size_t iters) {
  const std::size_t n = x.rows();
  const std::size_t m = x.cols();
  Matrix u = x;
  Matrix best = u;
  double best_value = prox_objective(u, x, lambda);
  const double c = lambda / 50.0;

  for (std::size_t k = 1; k <= iters; ++k) {
    std::size_t top = 0;
    double top_norm = -1.0;
    for (std::size_t j = 0; j < m; ++j) {
      const double norm = column_l1(u.column(j));
      if (norm > top_norm) {
        top_norm = norm;
        top = j;
      }
    }
    const double step = c / std::sqrt(static_cast<double>(k));
    for (std::size_t j = 0; j < m; ++j) {
      for (std::size_t i = 0; i < n; ++i) {
        double g = (u(i, j) - x(i, j)) / lambda;
        if (j == top && u(i, j) != 0.0) g += u(i, j) > 0.0 ? 1.0 : -1.0;
        u(i, j) -= step * g;
      }
    }
    const double value = prox_objective(u, x, lambda);
    if (value < best_value) {
      best_value = value;
      best = u;
    }
  }
  return best;
}

}  // namespace l11prox::oracle
