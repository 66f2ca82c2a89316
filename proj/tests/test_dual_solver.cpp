#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "l11prox/core.hpp"
#include "l11prox/dual_solver.hpp"
#include "l11prox/oracle.hpp"
#include "l11prox/random.hpp"
#include "l11prox/cli/verify.hpp"

using namespace l11prox;

namespace {

const Matrix kExample{{1, 0.1}, {2, 0.2}, {3, 0.3}};

double clipped_l1(std::span<const double> y, double level) {
  double s = 0.0;
  for (double v : y) s += std::max(v - level, 0.0);
  return s;
}

// Root of nu -> sum_i [y_i - lambda nu]^+ - t by plain bisection on nu; the
// map is strictly decreasing on (0, y_1 / lambda).
double nu_by_bisection(std::span<const double> y, double t, double lambda) {
  double lo = 0.0;
  double hi = y[0] / lambda;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (clipped_l1(y, lambda * mid) > t) lo = mid; else hi = mid;
  }
  return 0.5 * (lo + hi);
}

ColumnDual eval(std::vector<double> y, std::vector<double> z, double t, double lambda) {
  return nu_of_t_column(y, z, t, lambda);
}

}  // namespace

TEST_CASE("active_set examples and boundary") {
  const ColumnCache c = build_column_cache(kExample);
  CHECK(active_set(c, 0.5).indices == std::vector<std::size_t>{0, 1});
  CHECK(active_set(c, 0.9).indices == std::vector<std::size_t>{0});
  CHECK(active_set(c, c.t_max_global).indices.empty());
  // Exactly at a column norm the column is excluded.
  CHECK(active_set(c, c.col_norms[1]).indices == std::vector<std::size_t>{0});
  CHECK(active_set(c, 0.5).contains(1));
  CHECK_FALSE(active_set(c, 0.9).contains(1));
}

TEST_CASE("active sets shrink as t grows") {
  Rng rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    const Matrix x = random_matrix(rng.index(1, 6), rng.index(1, 6), Distribution::kGaussian, rng);
    const ColumnCache c = build_column_cache(x);
    double t1 = rng.uniform(0, c.t_max_global);
    double t2 = rng.uniform(0, c.t_max_global);
    if (t1 > t2) std::swap(t1, t2);
    const ActiveSet wide = active_set(c, t1);
    for (std::size_t j : active_set(c, t2).indices) CHECK(wide.contains(j));
  }
}

TEST_CASE("nu_of_t_column examples") {
  SUBCASE("single active entry") {
    const ColumnDual d = eval({3, 2, 1}, {3, 5, 6}, 0.9, 2.1);
    CHECK(d.support_size == 1);
    CHECK(d.nu == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(d.nu == doctest::Approx(nu_by_bisection(std::vector<double>{3, 2, 1}, 0.9, 2.1)));
    CHECK(clipped_l1(std::vector<double>{3, 2, 1}, 2.1 * d.nu) == doctest::Approx(0.9));
  }
  SUBCASE("one-element column") {
    const ColumnDual d = eval({1}, {1}, 0.4, 0.5);
    CHECK(d.support_size == 1);
    CHECK(d.nu == doctest::Approx(1.2).epsilon(1e-14));
    CHECK(1.0 - 0.5 * d.nu == doctest::Approx(0.4));
  }
  SUBCASE("tied entries stay in the support") {
    const ColumnDual d = eval({2, 2}, {2, 4}, 2.0, 1.0);
    CHECK(d.support_size == 2);
    CHECK(d.nu == 1.0);
  }
}

TEST_CASE("nu_of_t_column rejects inactive columns") {
  CHECK_THROWS_AS(eval({3, 2, 1}, {3, 5, 6}, 6.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(eval({3, 2, 1}, {3, 5, 6}, 7.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(eval({3, 2, 1}, {3, 5, 6}, 0.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(eval({3, 2, 1}, {3, 5, 6}, 1.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(eval({3, 2}, {3, 5, 6}, 1.0, 1.0), std::invalid_argument);
}

TEST_CASE("nu_vector on the worked example") {
  const ColumnCache c = build_column_cache(kExample);

  const DualEval at_opt = nu_vector(c, 0.9, 2.1);
  CHECK(at_opt.nu[0] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(at_opt.nu[1] == 0.0);
  CHECK(at_opt.sum_nu == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(at_opt.support_sizes == std::vector<std::size_t>{1, 0});

  const DualEval left = nu_vector(c, 0.45, 2.1);
  CHECK(left.nu[0] > 0.0);
  CHECK(left.nu[1] > 0.0);
  CHECK(left.sum_nu > 1.0);

  const DualEval right = nu_vector(c, 5.0, 2.1);
  CHECK(right.nu[0] > 0.0);
  CHECK(right.nu[1] == 0.0);
  CHECK(right.sum_nu < 1.0);
  // Full support at t = 5: nu = (6 - 5) / (3 * 2.1).
  CHECK(right.nu[0] == doctest::Approx(1.0 / 6.3));

  CHECK_THROWS_AS(nu_vector(c, 0.0, 2.1), std::domain_error);
  CHECK_THROWS_AS(nu_vector(c, 6.0, 2.1), std::domain_error);
  CHECK_THROWS_AS(nu_vector(c, -1.0, 2.1), std::domain_error);
}

TEST_CASE("per-column duals: residual, bracket, monotonicity, oracle agreement") {
  Rng rng(22);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = rng.index(1, 12);
    const Matrix x = random_matrix(n, 1, Distribution::kGaussian, rng);
    const ColumnCache c = build_column_cache(x);
    const auto y = c.sorted_abs.column(0);
    const auto z = c.cumsum.column(0);
    const double lambda = rng.uniform(0.1, 5.0);

    std::vector<double> grid(25);
    for (double& t : grid) t = rng.uniform(1e-6, 1.0 - 1e-6) * c.col_norms[0];
    std::sort(grid.begin(), grid.end());

    double prev = std::numeric_limits<double>::infinity();
    for (double t : grid) {
      const ColumnDual d = nu_of_t_column(y, z, t, lambda);
      const double level = lambda * d.nu;
      CHECK(d.nu > 0.0);
      CHECK(std::abs(clipped_l1(y, level) - t) <= 1e-12 * std::max(1.0, t));
      CHECK(y[d.support_size - 1] > level);
      if (d.support_size < n) CHECK(y[d.support_size] <= level);
      CHECK(d.nu == doctest::Approx(nu_by_bisection(y, t, lambda)).epsilon(1e-10));
      CHECK(d.nu < prev);
      prev = d.nu;
    }
  }
}

TEST_CASE("support gap i*y_i - (z_i - t) is nonincreasing and signs the support") {
  Rng rng(23);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = rng.index(1, 15);
    const Matrix x = random_matrix(n, 1, Distribution::kUniform, rng);
    const ColumnCache c = build_column_cache(x);
    const auto y = c.sorted_abs.column(0);
    const auto z = c.cumsum.column(0);
    const double t = rng.uniform(1e-6, 1.0) * c.col_norms[0];
    const double lambda = rng.uniform(0.1, 5.0);

    const ColumnDual d = nu_of_t_column(y, z, t, lambda);
    for (std::size_t i = 0; i < n; ++i) {
      const double gap = static_cast<double>(i + 1) * y[i] - (z[i] - t);
      if (i + 1 < n) {
        const double next = static_cast<double>(i + 2) * y[i + 1] - (z[i + 1] - t);
        CHECK(next <= gap + 1e-12 * z[n - 1]);
      }
      // y_i - lambda nu(t, i) has the sign of the gap.
      const double candidate = y[i] - (z[i] - t) / static_cast<double>(i + 1);
      CHECK((candidate >= 0.0) == (i < d.support_size));
    }
  }
}

TEST_CASE("the unscaled sequence y_i - lambda nu(t, i) need not be monotone") {
  // y = (1, 0.9, 0.9), t = 0.01: entries 2 and 3 give -0.045 and -0.03.
  const std::vector<double> y{1.0, 0.9, 0.9};
  const std::vector<double> z{1.0, 1.9, 2.8};
  const double t = 0.01;
  const double n2 = y[1] - (z[1] - t) / 2.0;
  const double n3 = y[2] - (z[2] - t) / 3.0;
  CHECK(n2 < n3);
  CHECK(n3 < 0.0);
  const ColumnDual d = nu_of_t_column(y, z, t, 1.0);
  CHECK(d.support_size == 1);
  CHECK(d.nu == doctest::Approx(0.99));
}

TEST_CASE("sign of sum_nu - 1 locates the optimal slack") {
  Rng rng(24);
  int probes = 0;
  for (int trial = 0; trial < 60; ++trial) {
    Rng inst_rng(1000 + trial);
    auto inst = cli::random_verify_instance(inst_rng, 5, 4);
    const double lmax = lambda_max(inst.x);
    if (inst.lambda >= lmax) inst.lambda = 0.5 * lmax;
    const auto ref = oracle::exhaustive_kkt_solve(inst.x, inst.lambda);
    const ColumnCache c = build_column_cache(inst.x);
    for (int k = 0; k < 20; ++k) {
      const double t = rng.uniform(1e-9, 1.0 - 1e-9) * c.t_max_global;
      if (std::abs(t - ref.t) <= 1e-9) continue;
      const double s = nu_vector(c, t, inst.lambda).sum_nu - 1.0;
      CHECK((s > 0.0) == (ref.t > t));
      CHECK((s < 0.0) == (ref.t < t));
      ++probes;
    }
  }
  CHECK(probes > 1000);
}
