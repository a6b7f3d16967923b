#include "fermat/partitions.hh"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "fermat/errors.hh"

namespace fermat {

Partition::Partition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw StructuralError("a partition needs at least one part");
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] == 0) throw StructuralError("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw StructuralError("partition parts must be weakly decreasing");
  }
  sum_ = std::accumulate(parts_.begin(), parts_.end(), 0u);
  unsigned current = 0;
  for (unsigned p : parts_) {
    if (!alpha_.empty() && p == current) {
      ++alpha_.back();
    } else {
      alpha_.push_back(1);
      current = p;
    }
  }
}

std::string Partition::str() const {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i > 0) out << ",";
    out << parts_[i];
  }
  out << ")";
  return out.str();
}

std::vector<Partition> enumerate_partitions(unsigned n_plus_1, unsigned d) {
  if (n_plus_1 < 2) throw StructuralError("need n+1 >= 2 to enumerate partitions");
  if (d < 2) throw StructuralError("need degree >= 2");
  const unsigned max_len = std::min(d, n_plus_1);
  std::vector<Partition> out;
  std::vector<unsigned> current;
  // Depth-first with parts tried largest-first gives decreasing lex order.
  auto rec = [&](auto&& self, unsigned remaining, unsigned cap) -> void {
    if (remaining == 0) {
      if (current.size() >= 2) out.emplace_back(current);
      return;
    }
    if (current.size() >= max_len) return;
    for (unsigned part = std::min(remaining, cap); part >= 1; --part) {
      current.push_back(part);
      self(self, remaining - part, part);
      current.pop_back();
    }
  };
  rec(rec, n_plus_1, n_plus_1);
  return out;
}

namespace {

std::uint64_t checked_u64(unsigned __int128 v, const char* what) {
  if (v > static_cast<unsigned __int128>(~std::uint64_t{0}))
    throw OverflowError(std::string(what) + " exceeds 64 bits");
  return static_cast<std::uint64_t>(v);
}

}  // namespace

std::uint64_t binomial_checked(unsigned n, unsigned k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 acc = 1;
  for (unsigned i = 1; i <= k; ++i) {
    acc = acc * (n - k + i);
    if (acc > (static_cast<unsigned __int128>(1) << 126))
      throw OverflowError("binomial coefficient overflow");
    acc /= i;
  }
  return checked_u64(acc, "binomial coefficient");
}

std::uint64_t coefficient_c(const Partition& a) {
  unsigned remaining = a.n_plus_1();
  unsigned __int128 acc = 1;
  const auto& parts = a.parts();
  for (std::size_t i = 0; i + 1 < parts.size(); ++i) {
    acc = acc * binomial_checked(remaining, parts[i]);
    if (acc > (static_cast<unsigned __int128>(1) << 126))
      throw OverflowError("partition coefficient overflow");
    remaining -= parts[i];
  }
  return checked_u64(acc, "partition coefficient c_a");
}

std::uint64_t symmetry_order_o(const Partition& a) {
  unsigned __int128 acc = 1;
  for (unsigned m : a.multiplicities())
    for (unsigned i = 2; i <= m; ++i) acc = acc * i;
  return checked_u64(acc, "symmetry order o_a");
}

}  // namespace fermat
