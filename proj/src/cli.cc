#include "fermat/cli.hh"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "fermat/errors.hh"
#include "fermat/version.hh"

namespace fermat {

namespace {

Environment make_environment(const EngineConfig& cfg) {
  Environment env;
  env.primes = cfg.primes;
  env.seed = cfg.seed;
  env.version = kVersion;
  return env;
}

std::vector<Strategy> parse_strategy_list(const std::string& csv) {
  std::vector<Strategy> out;
  std::stringstream in(csv);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    auto s = strategy_from_name(item);
    if (!s || *s == Strategy::automatic)
      throw CLI::ValidationError("--strategies", "unknown strategy '" + item + "'");
    out.push_back(*s);
  }
  return out;
}

bool strategy_applicable(Strategy s, unsigned n, unsigned d) {
  switch (s) {
    case Strategy::closed: return d == 2 || n == 2;
    case Strategy::random_data:
    case Strategy::random_diff: return n >= 2;
    case Strategy::partitioning:
    case Strategy::partitioning_diff: return n >= 1;
    case Strategy::automatic: return true;
  }
  return false;
}

}  // namespace

RunReport cmd_compute(const ComputeOptions& opt, const EngineConfig& cfg) {
  RunReport report;
  report.command = "compute";
  report.environment = make_environment(cfg);
  report.include_breakdown = opt.breakdown;
  try {
    report.results.push_back(compute_mldeg(opt.n, opt.d, cfg));
  } catch (const Error& e) {
    report.errored = true;
    report.notes.push_back(std::string("error: ") + e.what());
  }
  return report;
}

RunReport cmd_verify(const VerifyOptions& opt, const EngineConfig& cfg,
                     const GoldenTable& table) {
  RunReport report;
  report.command = "verify";
  report.environment = make_environment(cfg);
  std::size_t cells = 0;
  for (unsigned n = 2; n <= opt.max_n; ++n) {
    for (unsigned d = 2; d <= opt.max_d; ++d) {
      auto expected = table.lookup(n, d);
      if (!expected) continue;
      ++cells;
      try {
        ConsistencyReport check = cross_check(n, d, cfg, opt.strategies);
        if (check.results.empty()) {
          report.notes.push_back("n=" + std::to_string(n) + " d=" + std::to_string(d) +
                                 ": no requested strategy applies, skipped");
          continue;
        }
        for (const MLDegreeResult& r : check.results) report.results.push_back(r);
        bool cell_ok = check.consistent;
        if (!check.consistent)
          report.mismatches.push_back({n, d, expected, std::nullopt, check.detail});
        for (const MLDegreeResult& r : check.results) {
          if (r.value != *expected) {
            cell_ok = false;
            report.mismatches.push_back(
                {n, d, expected, r.value,
                 "strategy " + std::string(strategy_name(r.strategy)) + " disagrees with table"});
          }
        }
        report.notes.push_back("n=" + std::to_string(n) + " d=" + std::to_string(d) + ": " +
                               (cell_ok ? "pass" : "FAIL") + " (expected " +
                               std::to_string(*expected) + ", " +
                               std::to_string(check.results.size()) + " strategies)");
      } catch (const Error& e) {
        report.errored = true;
        report.notes.push_back("n=" + std::to_string(n) + " d=" + std::to_string(d) +
                               ": error: " + e.what());
      }
    }
  }
  if (cells == 0) report.notes.push_back("nothing to verify: no table entries within bounds");
  return report;
}

RunReport cmd_bench(const BenchOptions& opt, const EngineConfig& cfg) {
  RunReport report;
  report.command = "bench";
  report.environment = make_environment(cfg);
  if (opt.strategies.empty())
    throw StructuralError("bench needs at least one strategy");
  if (opt.n_lo > opt.n_hi || opt.d_lo > opt.d_hi)
    throw StructuralError("bench grid bounds are inverted");
  for (unsigned n = opt.n_lo; n <= opt.n_hi; ++n) {
    for (unsigned d = opt.d_lo; d <= opt.d_hi; ++d) {
      for (Strategy s : opt.strategies) {
        BenchRow row;
        row.n = n;
        row.d = d;
        row.strategy = std::string(strategy_name(s));
        EngineConfig cell_cfg = cfg;
        cell_cfg.strategy = s;
        cell_cfg.timeout_seconds = opt.cell_timeout_seconds;
        auto start = std::chrono::steady_clock::now();
        try {
          if (!strategy_applicable(s, n, d))
            throw StructuralError("strategy not applicable to this cell");
          MLDegreeResult r = compute_mldeg(n, d, cell_cfg);
          row.status = "ok";
          row.value = r.value;
        } catch (const TimeoutError&) {
          row.status = "timeout";
        } catch (const Error&) {
          row.status = "error";
          report.errored = true;
        }
        row.seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        report.bench_rows.push_back(std::move(row));
      }
    }
  }
  if (!opt.out_path.empty()) {
    std::ofstream out(opt.out_path);
    if (!out) {
      report.errored = true;
      report.notes.push_back("cannot write bench output to " + opt.out_path);
    } else {
      out << bench_rows_to_csv(report.bench_rows);
    }
  }
  return report;
}

RunReport cmd_partitions(const PartitionsOptions& opt, const EngineConfig& cfg) {
  RunReport report;
  report.command = "partitions";
  report.environment = make_environment(cfg);
  try {
    for (const Partition& a : enumerate_partitions(opt.n + 1, opt.d))
      report.partition_rows.push_back({a, coefficient_c(a), symmetry_order_o(a)});
  } catch (const Error& e) {
    report.errored = true;
    report.notes.push_back(std::string("error: ") + e.what());
  }
  return report;
}

namespace {

unsigned default_threads() {
  if (const char* env = std::getenv("FERMAT_MLD_THREADS")) {
    char* end = nullptr;
    unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1 && v <= 256) return static_cast<unsigned>(v);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : std::min(hw, 8u);
}

struct ParsedRange {
  unsigned lo = 0, hi = 0;
};

ParsedRange parse_range(const std::string& text) {
  ParsedRange r;
  auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      r.lo = r.hi = static_cast<unsigned>(std::stoul(text));
    } else {
      r.lo = static_cast<unsigned>(std::stoul(text.substr(0, dots)));
      r.hi = static_cast<unsigned>(std::stoul(text.substr(dots + 2)));
    }
  } catch (const std::exception&) {
    throw CLI::ValidationError("--grid", "ranges look like `2..5` or `3`, got '" + text + "'");
  }
  return r;
}

void add_engine_options(CLI::App* cmd, EngineConfig& cfg, std::string& format) {
  cmd->add_option("--prime", cfg.primes, "Prime modulus (repeatable)")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--seed", cfg.seed, "Seed for every random choice");
  cmd->add_option("--threads", cfg.threads, "Worker pool width")->check(CLI::PositiveNumber);
  cmd->add_option("--timeout", cfg.timeout_seconds, "Per-run timeout in seconds (0 = none)");
  cmd->add_option("--format", format, "Output format: text, json or csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact ML degrees of Fermat hypersurfaces over prime fields"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  EngineConfig cfg;
  cfg.threads = default_threads();
  std::string format = "text";

  ComputeOptions compute_opt;
  std::string compute_strategy = "auto";
  CLI::App* compute = app.add_subcommand("compute", "Compute one ML degree");
  compute->add_option("--n", compute_opt.n, "Projective dimension n")->required();
  compute->add_option("--d", compute_opt.d, "Degree d of the Fermat form")->required();
  compute->add_option("--strategy", compute_strategy, "Computation strategy")
      ->check(CLI::IsMember(
          {"auto", "closed", "partitioning", "partitioning-diff", "random", "random-diff"}));
  compute->add_flag("--breakdown", compute_opt.breakdown, "Print the per-partition table");
  add_engine_options(compute, cfg, format);

  VerifyOptions verify_opt;
  std::string verify_strategies;
  std::string verify_table;
  CLI::App* verify = app.add_subcommand("verify", "Check strategies against the reference table");
  verify->add_option("--max-n", verify_opt.max_n, "Largest n to verify");
  verify->add_option("--max-d", verify_opt.max_d, "Largest d to verify");
  verify->add_option("--strategies", verify_strategies, "Comma-separated strategy subset");
  verify->add_option("--table", verify_table, "Alternative golden table file");
  add_engine_options(verify, cfg, format);

  BenchOptions bench_opt;
  std::vector<std::string> bench_grid;
  std::string bench_strategies = "partitioning,partitioning-diff";
  CLI::App* bench = app.add_subcommand("bench", "Time strategies over a grid");
  bench->add_option("--grid", bench_grid, "n-range then d-range, e.g. --grid 2..3 2..4")
      ->expected(2);
  bench->add_option("--strategies", bench_strategies, "Comma-separated strategies to time");
  bench->add_option("--cell-timeout", bench_opt.cell_timeout_seconds,
                    "Per-cell timeout in seconds (0 = none)");
  bench->add_option("--out", bench_opt.out_path, "Write the CSV here as well");
  add_engine_options(bench, cfg, format);

  PartitionsOptions parts_opt;
  CLI::App* parts = app.add_subcommand("partitions", "List the partition strata with c_a, o_a");
  parts->add_option("--n", parts_opt.n, "Projective dimension n")->required();
  parts->add_option("--d", parts_opt.d, "Degree d")->required();
  add_engine_options(parts, cfg, format);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << "\n";
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  OutputFormat fmt = *format_from_name(format);
  try {
    RunReport report;
    if (compute->parsed()) {
      auto s = strategy_from_name(compute_strategy);
      EngineConfig run_cfg = cfg;
      run_cfg.strategy = *s;
      report = cmd_compute(compute_opt, run_cfg);
    } else if (verify->parsed()) {
      if (!verify_strategies.empty()) verify_opt.strategies = parse_strategy_list(verify_strategies);
      const GoldenTable table =
          verify_table.empty() ? GoldenTable::embedded() : GoldenTable::load(verify_table);
      report = cmd_verify(verify_opt, cfg, table);
    } else if (bench->parsed()) {
      if (!bench_grid.empty()) {
        ParsedRange nr = parse_range(bench_grid[0]);
        ParsedRange dr = parse_range(bench_grid[1]);
        bench_opt.n_lo = nr.lo;
        bench_opt.n_hi = nr.hi;
        bench_opt.d_lo = dr.lo;
        bench_opt.d_hi = dr.hi;
      }
      bench_opt.strategies = parse_strategy_list(bench_strategies);
      report = cmd_bench(bench_opt, cfg);
    } else {
      report = cmd_partitions(parts_opt, cfg);
    }
    out << render_report(report, fmt);
    return report.exit_code();
  } catch (const CLI::ValidationError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace fermat
