#include "l11prox/l11_solver.hpp"

#include <algorithm>
#include <cmath>

#include "l11prox/dual_solver.hpp"
#include "l11prox/primitives.hpp"

namespace l11prox {

namespace {

std::size_t default_iteration_cap(double t_max, double delta) {
  const double needed = t_max > delta ? std::ceil(std::log2(t_max / delta)) : 0.0;
  return static_cast<std::size_t>(needed) + 8;
}

ProxSolution zero_solution(const Matrix& x, const ColumnCache& cache, double lambda) {
  ProxSolution sol{Matrix(x.rows(), x.cols()), 0.0, std::vector<double>(x.cols(), 0.0),
                   {}, 0, true, {0.0, 0.0}};
  for (std::size_t j = 0; j < x.cols(); ++j) {
    sol.nu[j] = cache.sorted_abs(0, j) / lambda;
    if (cache.col_norms[j] > 0.0) sol.active_set.push_back(j);
  }
  return sol;
}

}  // namespace

ProxSolution prox_l11(const Matrix& x, const ProxConfig& config) {
  config.validate();
  const double lambda = config.lambda;
  const ColumnCache cache = build_column_cache(x);

  // Zero columns never enter I(t) for t > 0, so they pass through as zero
  // columns with nu_j = 0 without being filtered out.
  if (lambda >= lambda_max(x)) return zero_solution(x, cache, lambda);

  const double t_max = cache.t_max_global;
  const std::size_t cap = config.max_iters.value_or(default_iteration_cap(t_max, config.delta));

  double t_lo = 0.0;
  double t_hi = t_max;
  std::size_t iterations = 0;
  while (t_hi - t_lo > config.delta) {
    if (iterations == cap) {
      throw IterationLimitError("prox_l11: iteration cap " + std::to_string(cap) +
                                    " reached with bracket [" + std::to_string(t_lo) + ", " +
                                    std::to_string(t_hi) + "]",
                                t_lo, t_hi);
    }
    ++iterations;
    const double t = 0.5 * (t_lo + t_hi);
    const double excess = nu_vector(cache, t, lambda).sum_nu - 1.0;
    if (std::abs(excess) <= kDualSumTolerance) {
      t_lo = t_hi = t;
    } else if (excess > 0.0) {
      t_lo = t;
    } else {
      t_hi = t;
    }
  }

  ProxSolution sol{Matrix(x.rows(), x.cols()), 0.5 * (t_lo + t_hi), {}, {}, iterations, false,
                   {t_lo, t_hi}};
  const DualEval dual = nu_vector(cache, sol.t, lambda);
  sol.nu = dual.nu;
  for (std::size_t j = 0; j < x.cols(); ++j) {
    if (dual.nu[j] > 0.0) sol.active_set.push_back(j);
    const Threshold level(lambda * dual.nu[j]);
    const auto in = x.column(j);
    auto out = sol.u.column(j);
    std::transform(in.begin(), in.end(), out.begin(),
                   [level](double v) { return soft_threshold(v, level); });
  }
  sol.active_set_certified = certify_active_set(cache, sol.t, config.delta);
  return sol;
}

ProxSolution prox_linfinf(const Matrix& x, const ProxConfig& config) {
  ProxSolution sol = prox_l11(x.transpose(), config);
  sol.u = sol.u.transpose();
  return sol;
}

bool certify_active_set(const ColumnCache& cache, double t_hat, double delta) {
  return std::none_of(cache.col_norms.begin(), cache.col_norms.end(), [&](double norm) {
    return norm > t_hat - delta && norm <= t_hat + delta;
  });
}

KktReport kkt_report(const Matrix& x, double lambda, const ProxSolution& sol) {
  if (x.rows() != sol.u.rows() || x.cols() != sol.u.cols() || sol.nu.size() != x.cols()) {
    throw std::invalid_argument("kkt_report: shape mismatch between X, U and nu");
  }
  KktReport r;
  double nu_sum = 0.0;
  for (std::size_t j = 0; j < x.cols(); ++j) {
    const double nu = sol.nu[j];
    nu_sum += nu;
    double col_l1 = 0.0;
    for (double v : sol.u.column(j)) col_l1 += std::abs(v);

    r.primal_feasibility = std::max(r.primal_feasibility, col_l1 - sol.t);
    r.dual_feasibility = std::max(r.dual_feasibility, -nu);
    r.complementary_slackness =
        std::max(r.complementary_slackness, std::abs(nu) * std::abs(sol.t - col_l1));

    const Threshold level(std::max(lambda * nu, 0.0));
    for (std::size_t i = 0; i < x.rows(); ++i) {
      r.stationarity =
          std::max(r.stationarity, std::abs(sol.u(i, j) - soft_threshold(x(i, j), level)));
    }
  }
  r.dual_sum_gap = std::abs(nu_sum - 1.0);
  return r;
}

}  // namespace l11prox
