#pragma once

#include <stdexcept>
#include <string>

#include "l11prox/core.hpp"

namespace l11prox {

/// Raised when bisection has not closed the bracket within the iteration cap.
class IterationLimitError : public std::runtime_error {
 public:
  IterationLimitError(const std::string& what, double t_lo, double t_hi)
      : std::runtime_error(what), t_lo(t_lo), t_hi(t_hi) {}
  double t_lo;
  double t_hi;
};

/// |sum_j nu_j(t) - 1| at or below this stops bisection at t.
inline constexpr double kDualSumTolerance = 1e-14;

/// Prox of lambda * ||.||_{1,1}: minimizes max_j ||U_j||_1 + ||U - X||_F^2 / (2 lambda).
///
/// For lambda >= lambda_max(X) the result is U = 0, t = 0, nu_j = max_i |x_ij| / lambda.
/// Otherwise the slack t is bisected on [0, max_j ||X_j||_1] until the bracket
/// is no wider than delta, using the sign of sum_j nu_j(t) - 1, and U is the
/// column-wise soft threshold of X at lambda * nu(t) for the bracket midpoint t.
/// Every entry of U is then within delta of the exact prox, and every nu_j
/// within delta / lambda.
ProxSolution prox_l11(const Matrix& x, const ProxConfig& config);

/// Prox of lambda * ||.||_{inf,inf}, computed through the transpose. The
/// slack, duals and active set refer to rows of X.
ProxSolution prox_linfinf(const Matrix& x, const ProxConfig& config);

/// True iff no column norm lies in (t_hat - delta, t_hat + delta], so the active
/// set is constant on [t_hat - delta, t_hat + delta] and equals the optimal one.
bool certify_active_set(const ColumnCache& cache, double t_hat, double delta);

/// Throws std::invalid_argument on a shape mismatch between X, sol.u and sol.nu.
KktReport kkt_report(const Matrix& x, double lambda, const ProxSolution& sol);

}  // namespace l11prox
