#include "l11prox/cli/commands.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>

#include "l11prox/cli/bench.hpp"
#include "l11prox/cli/verify.hpp"
#include "l11prox/core.hpp"
#include "l11prox/csv.hpp"
#include "l11prox/l11_solver.hpp"
#include "l11prox/random.hpp"

namespace l11prox::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ProxArgs {
  std::string input;
  std::optional<double> lambda;
  std::optional<double> lambda_frac;
  double delta = kDefaultDelta;
  std::string norm = "l11";
  std::string output;
  bool emit_duals = false;
  int digits = 0;
};

struct BenchArgs {
  std::string sizes = "1000x50,10000x50,100000x50,10000x10,10000x100";
  std::size_t reps = 5;
  std::uint64_t seed = 0;
  std::string output;
};

struct GenArgs {
  long long n = 0;
  long long m = 0;
  std::uint64_t seed = 0;
  std::string dist = "gaussian";
  std::string output;
};

// Writes through `out` unless `path` names a file.
template <class Fn>
void with_output(const std::string& path, std::ostream& out, Fn&& write) {
  if (path.empty()) {
    write(out);
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot open '" + path + "' for writing");
  write(file);
}

template <class Range>
std::string join(const Range& values, auto&& fmt) {
  std::string s;
  bool first = true;
  for (const auto& v : values) {
    if (!first) s += ',';
    s += fmt(v);
    first = false;
  }
  return s;
}

int cmd_prox(const ProxArgs& a, std::ostream& out) {
  if (a.lambda.has_value() == a.lambda_frac.has_value()) {
    throw UsageError("exactly one of --lambda and --lambda-frac is required");
  }
  const Matrix x = csv::read_matrix(a.input);

  double lambda = 0.0;
  if (a.lambda) {
    lambda = *a.lambda;
  } else {
    if (!(*a.lambda_frac > 0.0 && *a.lambda_frac <= 1.0)) {
      throw UsageError("--lambda-frac must lie in (0, 1]");
    }
    const double lmax = a.norm == "l11" ? lambda_max(x) : lambda_max(x.transpose());
    lambda = *a.lambda_frac * lmax;
  }
  const ProxConfig config{lambda, a.delta, std::nullopt};
  const ProxSolution sol = a.norm == "l11" ? prox_l11(x, config) : prox_linfinf(x, config);

  with_output(a.output, out, [&](std::ostream& os) {
    csv::write_matrix(os, sol.u, a.digits);
    if (!a.emit_duals) return;
    const auto num = [](double v) { return csv::format_number(v); };
    os << "# t=" << num(sol.t) << '\n';
    os << "# nu=" << join(sol.nu, num) << '\n';
    os << "# active=" << join(sol.active_set, [](std::size_t j) { return std::to_string(j + 1); })
       << '\n';
    os << "# certified=" << (sol.active_set_certified ? "true" : "false") << '\n';
  });
  return kExitOk;
}

int cmd_verify(const VerifyOptions& o, std::ostream& out, std::ostream& err) {
  if (o.trials < 1) throw UsageError("--trials must be at least 1");
  if (o.max_n < 1 || o.max_n > 8 || o.max_m < 1 || o.max_m > 8) {
    throw UsageError("--max-n and --max-m must lie in [1, 8]");
  }
  if (!(o.tol > 0.0) || !(o.delta > 0.0)) throw UsageError("--tol and --delta must be positive");

  const VerifyReport r = run_verify(o);
  out << "trials: " << r.trials << '\n'
      << "max elementwise error: " << csv::format_number(r.max_error) << '\n'
      << "max solver KKT residual: " << csv::format_number(r.max_solver_kkt) << '\n'
      << "max oracle KKT residual: " << csv::format_number(r.max_oracle_kkt) << '\n';
  for (const auto& f : r.failures) err << "FAIL " << f << '\n';
  out << (r.passed() ? "PASS" : "FAIL") << '\n';
  return r.passed() ? kExitOk : kExitFailure;
}

int cmd_bench(const BenchArgs& a, std::ostream& out, std::ostream& err) {
  std::vector<BenchSize> sizes;
  try {
    sizes = parse_sizes(a.sizes);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (a.reps < 1) throw UsageError("--reps must be at least 1");

  const auto samples = run_bench(sizes, a.reps, a.seed);
  with_output(a.output, out, [&](std::ostream& os) { write_bench_csv(os, samples); });

  std::ostream& summary = a.output.empty() ? err : out;
  for (const BenchSize& s : sizes) {
    summary << "n=" << s.n << " m=" << s.m
            << " mean_wall_time_seconds=" << csv::format_number(mean_wall_time(samples, s))
            << '\n';
  }
  return kExitOk;
}

int cmd_gen(const GenArgs& a, std::ostream& out) {
  if (a.n < 1 || a.m < 1) throw UsageError("--n and --m must be at least 1");
  Rng rng(a.seed);
  const Matrix x = random_matrix(static_cast<std::size_t>(a.n), static_cast<std::size_t>(a.m),
                                 parse_distribution(a.dist), rng);
  with_output(a.output, out, [&](std::ostream& os) { csv::write_matrix(os, x); });
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Proximal operators of the induced l1 and l-infinity matrix norms"};
  app.name("l11prox");
  app.require_subcommand(1);

  ProxArgs prox_args;
  auto* prox = app.add_subcommand("prox", "Compute the prox of a CSV matrix");
  prox->add_option("--input", prox_args.input, "CSV matrix")->required();
  auto* lambda_opt = prox->add_option("--lambda", prox_args.lambda, "Regularization weight");
  auto* frac_opt =
      prox->add_option("--lambda-frac", prox_args.lambda_frac, "lambda as a fraction of lambda_max");
  lambda_opt->excludes(frac_opt);
  prox->add_option("--delta", prox_args.delta, "Bisection tolerance on t")
      ->capture_default_str();
  prox->add_option("--norm", prox_args.norm, "l11 or linfinf")
      ->check(CLI::IsMember({"l11", "linfinf"}))
      ->capture_default_str();
  prox->add_option("--output", prox_args.output, "Output path (default stdout)");
  prox->add_flag("--emit-duals", prox_args.emit_duals, "Append t, nu, active set as # comments");
  prox->add_option("--digits", prox_args.digits,
                   "Significant digits in the output (0: shortest round-trip)")
      ->check(CLI::Range(0, 17));

  VerifyOptions verify_opts;
  auto* verify = app.add_subcommand("verify", "Check the solver against the exhaustive oracle");
  verify->add_option("--trials", verify_opts.trials)->capture_default_str();
  verify->add_option("--max-n", verify_opts.max_n)->capture_default_str();
  verify->add_option("--max-m", verify_opts.max_m)->capture_default_str();
  verify->add_option("--seed", verify_opts.seed)->capture_default_str();
  verify->add_option("--tol", verify_opts.tol)->capture_default_str();
  verify->add_option("--delta", verify_opts.delta, "Solver bisection tolerance")
      ->capture_default_str();

  BenchArgs bench_args;
  auto* bench = app.add_subcommand("bench", "Time prox_l11 on Gaussian instances");
  bench->add_option("--sizes", bench_args.sizes, "Comma-separated NxM list")
      ->capture_default_str();
  bench->add_option("--reps", bench_args.reps)->capture_default_str();
  bench->add_option("--seed", bench_args.seed)->capture_default_str();
  bench->add_option("--output", bench_args.output, "CSV path (default stdout)");

  GenArgs gen_args;
  auto* gen = app.add_subcommand("gen", "Write a random CSV matrix");
  gen->add_option("--n", gen_args.n)->required();
  gen->add_option("--m", gen_args.m)->required();
  gen->add_option("--seed", gen_args.seed)->capture_default_str();
  gen->add_option("--dist", gen_args.dist)
      ->check(CLI::IsMember({"gaussian", "uniform"}))
      ->capture_default_str();
  gen->add_option("--output", gen_args.output, "Output path (default stdout)");

  std::vector<const char*> argv{"l11prox"};
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (prox->parsed()) return cmd_prox(prox_args, out);
    if (verify->parsed()) return cmd_verify(verify_opts, out, err);
    if (bench->parsed()) return cmd_bench(bench_args, out, err);
    if (gen->parsed()) return cmd_gen(gen_args, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const csv::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace l11prox::cli
