#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "l11prox/matrix.hpp"

namespace l11prox::oracle {

/// Brute-force ground truth for small instances. Independent of the
/// bisection path: it never evaluates nu(t) at a trial slack.
struct OracleSolution {
  Matrix u;
  double t = 0.0;
  std::vector<double> nu;
  bool verified = false;
  /// Number of (active set, support sizes) candidates examined, including the
  /// all-clipped one.
  std::size_t candidates = 0;
};

class OracleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kMaxOracleDim = 8;

/// Enumerates every nonempty column subset I and every tuple of support sizes
/// (k_j), solves the linear dual-sum equation for t, and keeps candidates that
/// satisfy the full optimality system. The all-clipped candidate U = 0 is
/// accepted iff lambda >= sum_j max_i |x_ij|; its duals are reported as
/// max_i |x_ij| / sum_j max_i |x_ij|, which sum to one.
///
/// Throws std::invalid_argument when n or m exceed kMaxOracleDim or
/// lambda <= 0, and OracleError when no candidate or several distinct
/// candidates verify (ties in the input).
OracleSolution exhaustive_kkt_solve(const Matrix& x, double lambda);

/// Subgradient descent on max_j ||U_j||_1 + ||U - X||_F^2 / (2 lambda) from
/// U = X with step lambda / (50 sqrt(k)), returning the best iterate seen.
/// Loose accuracy; a sanity check only.
Matrix subgradient_solve(const Matrix& x, double lambda, std::size_t iters);

/// The objective minimized by the l11 prox.
double prox_objective(const Matrix& u, const Matrix& x, double lambda);

}  // namespace l11prox::oracle
