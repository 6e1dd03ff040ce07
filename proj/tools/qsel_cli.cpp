#include <cstdint>
#include <fstream>
#include <iostream>
#include <limits>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qsel/dual.hpp"
#include "qsel/io.hpp"
#include "qsel/policy_sim.hpp"
#include "qsel/summary.hpp"
#include "qsel/tables.hpp"
#include "qsel/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitBadArgs = 2;
constexpr int kExitIoError = 3;

struct TablesArgs {
  int n_max = 1;
  std::string format = "csv";
  std::string out;
};

struct SimulateArgs {
  int n = 1;
  std::string mode = "shortcut";
  std::uint64_t reps = 10000;
  std::uint64_t seed = 42;
  std::string format = "csv";
  std::string out;
  std::string dump_samples;
};

struct VerifyArgs {
  int n_max = 10000;
  int var_n = 5000;
  int grid = 10000;
  std::string tol_profile = "default";
  bool corrupt_table = false;  // test hook
};

// Runs `body(stream)` against stdout or the --out file; returns an exit code.
template <class Body>
int with_output(const std::string& out_path, Body body) {
  if (out_path.empty()) {
    body(std::cout);
    return std::cout ? kExitOk : kExitIoError;
  }
  std::ofstream os(out_path);
  if (!os) {
    std::cerr << "error: cannot open '" << out_path << "' for writing\n";
    return kExitIoError;
  }
  body(os);
  if (!os) {
    std::cerr << "error: write to '" << out_path << "' failed\n";
    return kExitIoError;
  }
  return kExitOk;
}

int run_tables(const TablesArgs& args) {
  const qsel::BetaThresholdTable table = qsel::build_tables(args.n_max);
  return with_output(args.out, [&](std::ostream& os) {
    if (args.format == "json") {
      qsel::write_table_json(os, table);
    } else {
      qsel::write_table_csv(os, table);
    }
  });
}

int run_simulate(const SimulateArgs& args) {
  const qsel::BetaThresholdTable table = qsel::build_tables(args.n);
  qsel::StreamConfig cfg;
  cfg.seed = args.seed;
  cfg.replications = args.reps;
  cfg.mode = args.mode == "stream" ? qsel::Mode::kStream : qsel::Mode::kShortcut;

  const std::vector<double> samples =
      qsel::sample_completion_times(args.n, table, cfg);
  const qsel::SimulationSummary summary = qsel::summarize(samples);

  const double beta = table.beta[static_cast<std::size_t>(args.n)];
  const double v = table.v[static_cast<std::size_t>(args.n)];
  const double se = summary.std_error();
  const double z_mean =
      se > 0.0 ? (summary.mean() - beta) / se
               : (summary.mean() == beta ? 0.0 : std::numeric_limits<double>::infinity());
  const double se_var = qsel::variance_standard_error(samples);
  const double z_var =
      std::isfinite(se_var) && se_var > 0.0 ? (summary.variance() - v) / se_var : 0.0;

  if (!args.dump_samples.empty()) {
    const int rc = with_output(args.dump_samples, [&](std::ostream& os) {
      for (double s : samples) os << static_cast<std::uint64_t>(s) << '\n';
    });
    if (rc != kExitOk) return rc;
  }

  return with_output(args.out, [&](std::ostream& os) {
    using qsel::format_double;
    if (args.format == "json") {
      nlohmann::json obj{{"n", args.n},
                         {"mode", args.mode},
                         {"seed", args.seed},
                         {"replications", summary.count()},
                         {"mean", summary.mean()},
                         {"variance", summary.variance()},
                         {"std_error", se},
                         {"min", summary.min()},
                         {"max", summary.max()},
                         {"beta", beta},
                         {"v", v},
                         {"z_mean", z_mean},
                         {"z_var", z_var}};
      os << obj.dump(2) << '\n';
    } else {
      os << "n,mode,seed,replications,mean,variance,std_error,min,max,beta,v,"
            "z_mean,z_var\n"
         << args.n << ',' << args.mode << ',' << args.seed << ','
         << summary.count() << ',' << format_double(summary.mean()) << ','
         << format_double(summary.variance()) << ',' << format_double(se) << ','
         << format_double(summary.min()) << ',' << format_double(summary.max())
         << ',' << format_double(beta) << ',' << format_double(v) << ','
         << format_double(z_mean) << ',' << format_double(z_var) << '\n';
    }
  });
}

int run_verify(const VerifyArgs& args) {
  qsel::VerifyOptions opts;
  opts.n_max = args.n_max;
  opts.var_n = args.var_n;
  opts.dp_grid = args.grid;
  opts.profile = args.tol_profile == "strict" ? qsel::TolProfile::kStrict
                                              : qsel::TolProfile::kDefault;
  qsel::BetaThresholdTable table = qsel::build_tables(opts.n_max, opts.solver);
  if (args.corrupt_table) {
    // fault injection for exercising the failure path end to end
    table.beta[static_cast<std::size_t>((opts.n_max + 1) / 2)] *= 0.9;
  }
  const qsel::SizeFocusedValueGrid grid =
      qsel::size_focused_dp(opts.dp_horizon, opts.dp_grid);
  const std::vector<qsel::CheckResult> results =
      qsel::run_verification(opts, table, grid);
  qsel::print_results(std::cout, results);
  if (qsel::all_passed(results)) {
    std::cout << "all checks passed\n";
    return kExitOk;
  }
  std::cout << "verification FAILED\n";
  return kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact optimal-policy tables, Monte Carlo simulators, and bound "
      "verification for quickest online selection of an increasing "
      "subsequence"};
  app.require_subcommand(1);

  TablesArgs tables_args;
  CLI::App* tables = app.add_subcommand(
      "tables", "Tabulate beta(n), thresholds t_n, and exact variances");
  tables->add_option("n_max", tables_args.n_max, "largest n to tabulate")
      ->required()
      ->check(CLI::Range(1, 10000000));
  tables->add_option("--format", tables_args.format, "output format")
      ->check(CLI::IsMember({"csv", "json"}));
  tables->add_option("--out", tables_args.out, "output path (default stdout)");

  SimulateArgs sim_args;
  CLI::App* simulate = app.add_subcommand(
      "simulate", "Run the optimal threshold policy by Monte Carlo");
  simulate->add_option("n", sim_args.n, "subsequence length to select")
      ->required()
      ->check(CLI::Range(1, 10000000));
  simulate->add_option("--mode", sim_args.mode, "simulation mode")
      ->check(CLI::IsMember({"stream", "shortcut"}));
  simulate->add_option("--reps", sim_args.reps, "replications")
      ->check(CLI::Range(std::uint64_t{1}, std::uint64_t{1} << 40));
  simulate->add_option("--seed", sim_args.seed, "base RNG seed");
  simulate->add_option("--format", sim_args.format, "output format")
      ->check(CLI::IsMember({"csv", "json"}));
  simulate->add_option("--out", sim_args.out, "output path (default stdout)");
  simulate->add_option("--dump-samples", sim_args.dump_samples,
                       "write raw completion times, one integer per line");

  VerifyArgs verify_args;
  CLI::App* verify = app.add_subcommand(
      "verify", "Run every bound and asymptotic check; exit 0 iff all pass");
  verify->add_option("--n-max", verify_args.n_max, "table size for the checks")
      ->check(CLI::Range(1, 10000000));
  verify->add_option("--var-n", verify_args.var_n,
                     "n at which the variance ratio band is checked")
      ->check(CLI::Range(1, 10000000));
  verify->add_option("--grid", verify_args.grid, "size-focused DP grid size")
      ->check(CLI::Range(2, 100000000));
  verify->add_option("--tol-profile", verify_args.tol_profile,
                     "tolerance profile for the asymptotic bands")
      ->check(CLI::IsMember({"default", "strict"}));
  verify
      ->add_flag("--corrupt-table", verify_args.corrupt_table,
                 "deliberately corrupt the table first (test hook)")
      ->group("");  // hidden

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitBadArgs;
  }

  try {
    if (tables->parsed()) return run_tables(tables_args);
    if (simulate->parsed()) return run_simulate(sim_args);
    if (verify->parsed()) return run_verify(verify_args);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBadArgs;
  }
  return kExitBadArgs;
}
