#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "l11prox/matrix.hpp"
#include "l11prox/random.hpp"

namespace l11prox::cli {

struct VerifyOptions {
  std::size_t trials = 500;
  std::size_t max_n = 5;
  std::size_t max_m = 4;
  std::uint64_t seed = 0;
  double tol = 1e-8;
  /// Bisection tolerance handed to the solver.
  double delta = 1e-10;
};

struct VerifyInstance {
  Matrix x;
  double lambda;
};

/// Random tie-free instance: n in [1, max_n], m in [1, max_m], entries uniform
/// on [-1, 1] plus index jitter, lambda uniform in (0.05, 1.2) * lambda_max.
VerifyInstance random_verify_instance(Rng& rng, std::size_t max_n, std::size_t max_m);

/// Seed of trial k, so that `--seed <trial_seed> --trials 1` replays it.
inline std::uint64_t trial_seed(std::uint64_t seed, std::size_t trial) { return seed + trial; }

struct VerifyReport {
  std::size_t trials = 0;
  double max_error = 0.0;       // max |U_solver - U_oracle|
  double max_solver_kkt = 0.0;  // dual-sum gap excluded on the all-zero branch
  double max_oracle_kkt = 0.0;
  std::vector<std::string> failures;

  bool passed() const { return failures.empty(); }
};

VerifyReport run_verify(const VerifyOptions& options);

}  // namespace l11prox::cli
