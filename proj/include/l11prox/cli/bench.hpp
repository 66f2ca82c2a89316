#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace l11prox::cli {

struct BenchSize {
  std::size_t n = 0;
  std::size_t m = 0;
  friend bool operator==(const BenchSize&, const BenchSize&) = default;
};

/// One timed prox evaluation.
struct BenchRecord {
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t rep = 0;
  double lambda = 0.0;
  double delta = 0.0;
  double wall_time_seconds = 0.0;
  std::size_t iterations = 0;
  double nnz_fraction = 0.0;  // nonzero entries of U over n * m
  friend bool operator==(const BenchRecord&, const BenchRecord&) = default;
};

/// A record plus the bisection bracket width it started from, for checking
/// the iteration count.
struct BenchSample {
  BenchRecord record;
  double t_max = 0.0;
};

inline constexpr std::string_view kBenchHeader =
    "n,m,rep,lambda,delta,wall_time_seconds,iterations,nnz_fraction";

/// Parses "1000x50,10000x50". Throws std::invalid_argument on a bad token.
std::vector<BenchSize> parse_sizes(std::string_view text);

/// For every size and rep, draws a standard Gaussian matrix, sets
/// lambda = 0.5 * lambda_max and times prox_l11 alone. Instances are drawn in
/// order from one generator seeded with `seed`.
std::vector<BenchSample> run_bench(const std::vector<BenchSize>& sizes, std::size_t reps,
                                   std::uint64_t seed, double delta = 1e-8);

void write_bench_csv(std::ostream& out, const std::vector<BenchSample>& samples);
std::vector<BenchRecord> parse_bench_csv(std::string_view text);

/// Mean wall time of the samples matching `size`.
double mean_wall_time(const std::vector<BenchSample>& samples, BenchSize size);

}  // namespace l11prox::cli
