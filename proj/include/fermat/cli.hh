#ifndef FERMAT_CLI_HH
#define FERMAT_CLI_HH

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "fermat/golden_table.hh"
#include "fermat/report.hh"

namespace fermat {

struct ComputeOptions {
  unsigned n = 0;
  unsigned d = 0;
  bool breakdown = false;
};

struct VerifyOptions {
  unsigned max_n = 4;
  unsigned max_d = 4;
  std::vector<Strategy> strategies;  // empty = every applicable strategy
};

struct BenchOptions {
  unsigned n_lo = 2, n_hi = 3;
  unsigned d_lo = 2, d_hi = 3;
  std::vector<Strategy> strategies;
  double cell_timeout_seconds = 0;
  std::string out_path;  // empty = stdout only
};

struct PartitionsOptions {
  unsigned n = 0;
  unsigned d = 0;
};

RunReport cmd_compute(const ComputeOptions& opt, const EngineConfig& cfg);
RunReport cmd_verify(const VerifyOptions& opt, const EngineConfig& cfg,
                     const GoldenTable& table);
RunReport cmd_bench(const BenchOptions& opt, const EngineConfig& cfg);
RunReport cmd_partitions(const PartitionsOptions& opt, const EngineConfig& cfg);

// Full command line: parses argv, runs the subcommand, renders the report.
// Returns the process exit code (0 ok, 1 computation error or mismatch,
// 2 usage error).
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace fermat

#endif  // FERMAT_CLI_HH
