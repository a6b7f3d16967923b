#ifndef FERMAT_GOLDEN_TABLE_HH
#define FERMAT_GOLDEN_TABLE_HH

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>

namespace fermat {

// Reference ML degrees keyed by (n, d). Backed by a plain-text data file of
// whitespace-separated `n d value` triples with `#` comments; a copy of the
// repository file is compiled into the library.
class GoldenTable {
public:
  static const GoldenTable& embedded();
  static GoldenTable parse(std::istream& in);
  static GoldenTable load(const std::string& path);

  std::optional<std::uint64_t> lookup(unsigned n, unsigned d) const;
  const std::map<std::pair<unsigned, unsigned>, std::uint64_t>& entries() const {
    return entries_;
  }

private:
  std::map<std::pair<unsigned, unsigned>, std::uint64_t> entries_;
};

}  // namespace fermat

#endif  // FERMAT_GOLDEN_TABLE_HH
