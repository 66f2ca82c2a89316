#include "l11prox/cli/verify.hpp"

#include <algorithm>
#include <exception>

#include "l11prox/core.hpp"
#include "l11prox/csv.hpp"
#include "l11prox/l11_solver.hpp"
#include "l11prox/oracle.hpp"

namespace l11prox::cli {

VerifyInstance random_verify_instance(Rng& rng, std::size_t max_n, std::size_t max_m) {
  const std::size_t n = rng.index(1, max_n);
  const std::size_t m = rng.index(1, max_m);
  Matrix x = random_matrix(n, m, Distribution::kUniform, rng);
  add_index_jitter(x);
  const double frac = rng.uniform(0.05, 1.2);
  return {x, frac * lambda_max(x)};
}

VerifyReport run_verify(const VerifyOptions& options) {
  VerifyReport report;
  for (std::size_t trial = 0; trial < options.trials; ++trial) {
    const std::uint64_t seed = trial_seed(options.seed, trial);
    Rng rng(seed);
    const VerifyInstance inst = random_verify_instance(rng, options.max_n, options.max_m);
    ++report.trials;

    const auto describe = [&] {
      return "trial " + std::to_string(trial) + " (seed " + std::to_string(seed) + ", " +
             std::to_string(inst.x.rows()) + "x" + std::to_string(inst.x.cols()) +
             ", lambda " + csv::format_number(inst.lambda) + ")";
    };

    try {
      const ProxSolution sol = prox_l11(inst.x, {inst.lambda, options.delta, std::nullopt});
      const oracle::OracleSolution ref = oracle::exhaustive_kkt_solve(inst.x, inst.lambda);

      const double error = max_abs_diff(sol.u, ref.u);

      KktReport solver_kkt = kkt_report(inst.x, inst.lambda, sol);
      // On the all-zero branch the reported duals follow the closed form
      // max_i |x_ij| / lambda, whose sum is below one when lambda > lambda_max.
      if (inst.lambda >= lambda_max(inst.x)) solver_kkt.dual_sum_gap = 0.0;

      ProxSolution as_solution{ref.u, ref.t, ref.nu, {}, 0, false, {ref.t, ref.t}};
      const KktReport oracle_kkt = kkt_report(inst.x, inst.lambda, as_solution);

      report.max_error = std::max(report.max_error, error);
      report.max_solver_kkt = std::max(report.max_solver_kkt, solver_kkt.max_residual());
      report.max_oracle_kkt = std::max(report.max_oracle_kkt, oracle_kkt.max_residual());

      if (error > options.tol || solver_kkt.max_residual() > options.tol ||
          oracle_kkt.max_residual() > options.tol) {
        report.failures.push_back(describe() + ": error " + csv::format_number(error) +
                                  ", solver KKT " +
                                  csv::format_number(solver_kkt.max_residual()) +
                                  ", oracle KKT " +
                                  csv::format_number(oracle_kkt.max_residual()));
      }
    } catch (const std::exception& e) {
      report.failures.push_back(describe() + ": " + e.what());
    }
  }
  return report;
}

}  // namespace l11prox::cli
