#ifndef FERMAT_REPORT_HH
#define FERMAT_REPORT_HH

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fermat/mldeg.hh"

namespace fermat {

enum class OutputFormat { text, json, csv };

std::optional<OutputFormat> format_from_name(std::string_view name);

struct Environment {
  std::vector<std::uint32_t> primes;
  std::uint64_t seed = 0;
  std::string version;
};

struct Mismatch {
  unsigned n = 0;
  unsigned d = 0;
  std::optional<std::uint64_t> expected;
  std::optional<std::uint64_t> actual;
  std::string detail;
};

struct BenchRow {
  unsigned n = 0;
  unsigned d = 0;
  std::string strategy;
  std::string status;  // ok | timeout | error
  double seconds = 0;
  std::optional<std::uint64_t> value;
};

struct PartitionRow {
  Partition a;
  std::uint64_t c = 0;
  std::uint64_t o = 0;
};

// Everything a command run produced. The exit status is nonzero exactly when
// a mismatch was recorded or some run errored.
struct RunReport {
  std::string command;
  Environment environment;
  std::vector<MLDegreeResult> results;
  std::vector<Mismatch> mismatches;
  std::vector<BenchRow> bench_rows;           // bench only
  std::vector<PartitionRow> partition_rows;   // partitions only
  std::vector<std::string> notes;
  bool include_breakdown = false;
  bool errored = false;

  int exit_code() const { return errored || !mismatches.empty() ? 1 : 0; }
};

// Canonical JSON: fixed field order, integer ML-degree values.
std::string report_to_json(const RunReport& report);
std::string report_to_text(const RunReport& report);
// CSV with header n,d,strategy,status,seconds,value (bench rows).
std::string bench_rows_to_csv(const std::vector<BenchRow>& rows);

std::string render_report(const RunReport& report, OutputFormat format);

}  // namespace fermat

#endif  // FERMAT_REPORT_HH
