#include "fermat/golden_table.hh"

#include <fstream>
#include <sstream>

#include "fermat/errors.hh"

namespace fermat {

extern const char* const kEmbeddedGoldenTable;  // generated from data/golden_table.txt

const GoldenTable& GoldenTable::embedded() {
  static const GoldenTable table = [] {
    std::istringstream in(kEmbeddedGoldenTable);
    return parse(in);
  }();
  return table;
}

GoldenTable GoldenTable::parse(std::istream& in) {
  GoldenTable table;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream row(line);
    unsigned n, d;
    std::uint64_t value;
    if (!(row >> n)) continue;  // blank or comment-only line
    if (!(row >> d >> value))
      throw StructuralError("golden table line " + std::to_string(lineno) +
                            ": expected `n d value`");
    std::string rest;
    if (row >> rest)
      throw StructuralError("golden table line " + std::to_string(lineno) +
                            ": trailing tokens");
    table.entries_[{n, d}] = value;
  }
  return table;
}

GoldenTable GoldenTable::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw StructuralError("cannot open golden table file: " + path);
  return parse(in);
}

std::optional<std::uint64_t> GoldenTable::lookup(unsigned n, unsigned d) const {
  auto it = entries_.find({n, d});
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

}  // namespace fermat
