#include "fermat/report.hh"

#include <iomanip>
#include <sstream>

#include <json.hpp>

namespace fermat {

std::optional<OutputFormat> format_from_name(std::string_view name) {
  if (name == "text") return OutputFormat::text;
  if (name == "json") return OutputFormat::json;
  if (name == "csv") return OutputFormat::csv;
  return std::nullopt;
}

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json breakdown_json(const std::vector<PartitionContribution>& lines) {
  ordered_json rows = ordered_json::array();
  for (const PartitionContribution& line : lines) {
    ordered_json row;
    row["partition"] = line.a.parts();
    row["c"] = line.c;
    row["o"] = line.o;
    row["degree"] = line.ideal_degree;
    row["contribution"] = line.contribution;
    rows.push_back(std::move(row));
  }
  return rows;
}

ordered_json result_json(const MLDegreeResult& r, bool include_breakdown) {
  ordered_json out;
  out["n"] = r.n;
  out["d"] = r.d;
  out["strategy"] = std::string(strategy_name(r.strategy));
  out["value"] = r.value;
  if (include_breakdown && r.breakdown) out["breakdown"] = breakdown_json(*r.breakdown);
  out["seconds"] = r.total_seconds();
  return out;
}

}  // namespace

std::string report_to_json(const RunReport& report) {
  ordered_json out;
  out["command"] = report.command;
  {
    ordered_json env;
    env["primes"] = report.environment.primes;
    env["seed"] = report.environment.seed;
    env["version"] = report.environment.version;
    out["environment"] = std::move(env);
  }
  {
    ordered_json results = ordered_json::array();
    for (const MLDegreeResult& r : report.results)
      results.push_back(result_json(r, report.include_breakdown));
    out["results"] = std::move(results);
  }
  {
    ordered_json mismatches = ordered_json::array();
    for (const Mismatch& m : report.mismatches) {
      ordered_json row;
      row["n"] = m.n;
      row["d"] = m.d;
      if (m.expected) row["expected"] = *m.expected;
      if (m.actual) row["actual"] = *m.actual;
      row["detail"] = m.detail;
      mismatches.push_back(std::move(row));
    }
    out["mismatches"] = std::move(mismatches);
  }
  if (!report.bench_rows.empty()) {
    ordered_json rows = ordered_json::array();
    for (const BenchRow& b : report.bench_rows) {
      ordered_json row;
      row["n"] = b.n;
      row["d"] = b.d;
      row["strategy"] = b.strategy;
      row["status"] = b.status;
      row["seconds"] = b.seconds;
      if (b.value) row["value"] = *b.value;
      rows.push_back(std::move(row));
    }
    out["bench"] = std::move(rows);
  }
  if (!report.partition_rows.empty()) {
    ordered_json rows = ordered_json::array();
    for (const PartitionRow& p : report.partition_rows) {
      ordered_json row;
      row["partition"] = p.a.parts();
      row["c"] = p.c;
      row["o"] = p.o;
      rows.push_back(std::move(row));
    }
    out["partitions"] = std::move(rows);
  }
  if (!report.notes.empty()) out["notes"] = report.notes;
  return out.dump(2) + "\n";
}

namespace {

void render_result_text(std::ostream& out, const MLDegreeResult& r, bool include_breakdown) {
  out << "MLdeg F_{" << r.n << "," << r.d << "} = " << r.value << "  [" << strategy_name(r.strategy);
  if (!r.primes.empty()) {
    out << ", primes";
    for (std::uint32_t p : r.primes) out << " " << p;
  }
  out << ", " << std::fixed << std::setprecision(3) << r.total_seconds() << "s]\n";
  out.unsetf(std::ios::fixed);
  if (include_breakdown && r.breakdown) {
    out << "  partition        c_a       o_a   deg   contribution\n";
    for (const PartitionContribution& line : *r.breakdown) {
      out << "  " << std::left << std::setw(14) << line.a.str() << std::right << std::setw(9)
          << line.c << std::setw(10) << line.o << std::setw(6) << line.ideal_degree
          << std::setw(15) << line.contribution << "\n";
    }
  }
}

}  // namespace

std::string report_to_text(const RunReport& report) {
  std::ostringstream out;
  for (const std::string& note : report.notes) out << note << "\n";
  for (const MLDegreeResult& r : report.results)
    render_result_text(out, r, report.include_breakdown);
  if (!report.partition_rows.empty()) {
    out << "partition        c_a       o_a\n";
    for (const PartitionRow& p : report.partition_rows)
      out << std::left << std::setw(14) << p.a.str() << std::right << std::setw(9) << p.c
          << std::setw(10) << p.o << "\n";
  }
  if (!report.bench_rows.empty()) out << bench_rows_to_csv(report.bench_rows);
  for (const Mismatch& m : report.mismatches) {
    out << "MISMATCH n=" << m.n << " d=" << m.d;
    if (m.expected) out << " expected " << *m.expected;
    if (m.actual) out << " got " << *m.actual;
    if (!m.detail.empty()) out << " (" << m.detail << ")";
    out << "\n";
  }
  return out.str();
}

std::string bench_rows_to_csv(const std::vector<BenchRow>& rows) {
  std::ostringstream out;
  out << "n,d,strategy,status,seconds,value\n";
  for (const BenchRow& b : rows) {
    out << b.n << "," << b.d << "," << b.strategy << "," << b.status << "," << std::fixed
        << std::setprecision(6) << b.seconds << ",";
    out.unsetf(std::ios::fixed);
    if (b.value) out << *b.value;
    out << "\n";
  }
  return out.str();
}

std::string render_report(const RunReport& report, OutputFormat format) {
  switch (format) {
    case OutputFormat::json: return report_to_json(report);
    case OutputFormat::csv: return bench_rows_to_csv(report.bench_rows);
    case OutputFormat::text: return report_to_text(report);
  }
  return report_to_text(report);
}

}  // namespace fermat
