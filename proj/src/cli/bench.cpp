#include "l11prox/cli/bench.hpp"

#include <charconv>
#include <chrono>
#include <ostream>
#include <stdexcept>
#include <string>

#include "l11prox/core.hpp"
#include "l11prox/csv.hpp"
#include "l11prox/l11_solver.hpp"
#include "l11prox/random.hpp"

namespace l11prox::cli {

namespace {

std::size_t parse_count(std::string_view token, std::string_view what) {
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
    throw std::invalid_argument("bad " + std::string(what) + " '" + std::string(token) + "'");
  }
  return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  while (true) {
    const auto pos = text.find(sep);
    parts.push_back(text.substr(0, pos));
    if (pos == std::string_view::npos) break;
    text = text.substr(pos + 1);
  }
  return parts;
}

}  // namespace

std::vector<BenchSize> parse_sizes(std::string_view text) {
  std::vector<BenchSize> sizes;
  for (std::string_view token : split(text, ',')) {
    const auto x = token.find('x');
    if (x == std::string_view::npos) {
      throw std::invalid_argument("bad size token '" + std::string(token) + "' (expected NxM)");
    }
    BenchSize s{parse_count(token.substr(0, x), "row count"),
                parse_count(token.substr(x + 1), "column count")};
    if (s.n == 0 || s.m == 0) {
      throw std::invalid_argument("bad size token '" + std::string(token) +
                                  "' (dimensions must be positive)");
    }
    sizes.push_back(s);
  }
  return sizes;
}

std::vector<BenchSample> run_bench(const std::vector<BenchSize>& sizes, std::size_t reps,
                                   std::uint64_t seed, double delta) {
  Rng rng(seed);
  std::vector<BenchSample> samples;
  for (const BenchSize& size : sizes) {
    for (std::size_t rep = 0; rep < reps; ++rep) {
      const Matrix x = random_matrix(size.n, size.m, Distribution::kGaussian, rng);
      const ProxConfig config{0.5 * lambda_max(x), delta, std::nullopt};

      const auto start = std::chrono::steady_clock::now();
      const ProxSolution sol = prox_l11(x, config);
      const auto stop = std::chrono::steady_clock::now();

      std::size_t nnz = 0;
      for (double v : sol.u.data()) nnz += v != 0.0;

      BenchSample s;
      s.record = {size.n,
                  size.m,
                  rep,
                  config.lambda,
                  config.delta,
                  std::chrono::duration<double>(stop - start).count(),
                  sol.iterations,
                  static_cast<double>(nnz) / static_cast<double>(x.size())};
      s.t_max = l11_norm(x);
      samples.push_back(s);
    }
  }
  return samples;
}

void write_bench_csv(std::ostream& out, const std::vector<BenchSample>& samples) {
  out << kBenchHeader << '\n';
  for (const auto& s : samples) {
    const BenchRecord& r = s.record;
    out << r.n << ',' << r.m << ',' << r.rep << ',' << csv::format_number(r.lambda) << ','
        << csv::format_number(r.delta) << ',' << csv::format_number(r.wall_time_seconds) << ','
        << r.iterations << ',' << csv::format_number(r.nnz_fraction) << '\n';
  }
}

std::vector<BenchRecord> parse_bench_csv(std::string_view text) {
  std::vector<BenchRecord> records;
  bool header = true;
  for (std::string_view line : split(text, '\n')) {
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    if (header) {
      if (line != kBenchHeader) throw std::invalid_argument("unexpected bench CSV header");
      header = false;
      continue;
    }
    const auto f = split(line, ',');
    if (f.size() != 8) throw std::invalid_argument("bench CSV row needs 8 fields");
    const auto real = [](std::string_view s) {
      return csv::parse_matrix(s)(0, 0);
    };
    records.push_back({parse_count(f[0], "n"), parse_count(f[1], "m"), parse_count(f[2], "rep"),
                       real(f[3]), real(f[4]), real(f[5]), parse_count(f[6], "iterations"),
                       real(f[7])});
  }
  return records;
}

double mean_wall_time(const std::vector<BenchSample>& samples, BenchSize size) {
  double total = 0.0;
  std::size_t count = 0;
  for (const auto& s : samples) {
    if (s.record.n == size.n && s.record.m == size.m) {
      total += s.record.wall_time_seconds;
      ++count;
    }
  }
  return count == 0 ? 0.0 : total / static_cast<double>(count);
}

}  // namespace l11prox::cli
