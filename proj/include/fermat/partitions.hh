#ifndef FERMAT_PARTITIONS_HH
#define FERMAT_PARTITIONS_HH

#include <cstdint>
#include <string>
#include <vector>

namespace fermat {

// An integer partition a_1 >= ... >= a_s >= 1 of n+1, together with the
// multiplicity vector of its repeated values. A critical point "of type a"
// has s distinct coordinate values, the i-th repeated a_i times.
class Partition {
public:
  explicit Partition(std::vector<unsigned> parts);

  const std::vector<unsigned>& parts() const { return parts_; }
  unsigned n_plus_1() const { return sum_; }
  unsigned length() const { return static_cast<unsigned>(parts_.size()); }
  // Multiplicities of the distinct values, in order of first appearance.
  const std::vector<unsigned>& multiplicities() const { return alpha_; }

  std::string str() const;  // e.g. "(2,1,1)"

  bool operator==(const Partition& other) const { return parts_ == other.parts_; }
  bool operator<(const Partition& other) const { return parts_ < other.parts_; }

private:
  std::vector<unsigned> parts_;
  unsigned sum_;
  std::vector<unsigned> alpha_;
};

// All partitions of n+1 with length between 2 and min(d, n+1), in decreasing
// lexicographic order. Length 1 is excluded: the all-equal point lies off the
// Fermat hypersurface, so that stratum is always empty.
std::vector<Partition> enumerate_partitions(unsigned n_plus_1, unsigned d);

// Number of ways to split the n+1 coordinate slots into blocks of sizes
// a_1, ..., a_s: the product binom(n+1, a_1) binom(n+1-a_1, a_2) ... over the
// first s-1 parts. Exact; throws OverflowError instead of wrapping.
std::uint64_t coefficient_c(const Partition& a);

// Order of the group permuting equal-sized blocks: the product of the
// factorials of the multiplicities.
std::uint64_t symmetry_order_o(const Partition& a);

// Exact binomial coefficient with overflow detection.
std::uint64_t binomial_checked(unsigned n, unsigned k);

}  // namespace fermat

#endif  // FERMAT_PARTITIONS_HH
