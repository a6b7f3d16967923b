#ifndef FERMAT_FERMAT_IDEALS_HH
#define FERMAT_FERMAT_IDEALS_HH

#include <cstdint>
#include <span>
#include <vector>

#include "fermat/groebner.hh"
#include "fermat/partitions.hh"
#include "fermat/polynomial.hh"
#include "fermat/rng.hh"

namespace fermat {

// Coordinate ring k[x_0..x_n] of the ambient projective space, grevlex.
RingPtr coordinate_ring(std::uint32_t p, unsigned n);
// Ring k[z_1..z_s] hosting the per-partition ideals, grevlex.
RingPtr stratum_ring(std::uint32_t p, unsigned s);

// The data vector u of the likelihood function: n+1 nonzero entries whose
// sum is nonzero mod p (both required for the slice ideal to be independent
// of u).
class DataVector {
public:
  static DataVector all_ones(const PrimeField& field, unsigned n_plus_1);
  // Entries uniform in [1, p-1], resampled until the sum is nonzero.
  static DataVector sample(const PrimeField& field, unsigned n_plus_1, SplitMix64& rng);
  static DataVector from_entries(const PrimeField& field,
                                 std::vector<PrimeField::Element> entries);

  std::span<const PrimeField::Element> entries() const { return u_; }
  PrimeField::Element entry(std::size_t i) const { return u_[i]; }
  PrimeField::Element sum() const { return sum_; }
  std::size_t size() const { return u_.size(); }
  bool is_all_ones() const;

private:
  DataVector(std::vector<PrimeField::Element> u, PrimeField::Element sum)
      : u_(std::move(u)), sum_(sum) {}
  std::vector<PrimeField::Element> u_;
  PrimeField::Element sum_;
};

// x_0^d + ... + x_n^d in the given ring (n+1 = ring variable count).
Polynomial fermat_polynomial(const RingPtr& ring, unsigned d);

// The 3x3 minor of the critical-point matrix (rows u, x, x^d) for columns
// i < j < k. All-ones data dispatches to the factored construction; general
// data expands the three-term formula.
Polynomial minor(const RingPtr& ring, const DataVector& u, unsigned d, unsigned i, unsigned j,
                 unsigned k);

// Complete homogeneous symmetric sum of degree m in the variables whose ring
// indices are listed in `indices` (the sum of every degree-m monomial in
// those variables); degree 0 gives 1.
Polynomial symmetric_sum(const RingPtr& ring, std::span<const std::size_t> indices, unsigned m);

// The all-ones minor built from its factorization
// (z_i - z_j)(z_j - z_k)(z_k - z_i) * h_{d-2}(z_i, z_j, z_k).
Polynomial factored_minor(const RingPtr& ring, unsigned d, unsigned i, unsigned j, unsigned k);

// The critical ideal: the Fermat polynomial together with all binom(n+1,3)
// minors; its solutions off the distinguished arrangement are the critical
// points being counted.
Ideal critical_ideal(unsigned n, unsigned d, const DataVector& u, std::uint32_t p);

// Saturation by the single linear form x_0 + ... + x_n; every solution on
// the arrangement has coordinate sum zero, so this removes all of them.
Ideal remove_arrangement(const Ideal& ideal);

// The u-independent ideal of critical points on the hyperplane sum x_i = 0:
// (sum x_i, fermat, x_k x_h (x_h^{d-1} - x_k^{d-1}) for all k < h).
Ideal arrangement_slice_ideal(unsigned n, unsigned d, std::uint32_t p);

// Generators of the stratum ideal before any colon: the weighted Fermat form
// a_1 z_1^d + ... + a_s z_s^d plus all all-ones minors.
std::vector<Polynomial> partition_ideal_generators(const RingPtr& ring, const Partition& a,
                                                   unsigned d);
// The weighted linear form a_1 z_1 + ... + a_s z_s.
Polynomial weighted_linear_form(const RingPtr& ring, const Partition& a);

// The ideal of a-critical values: generators saturated by the weighted
// linear form and every difference z_i - z_j. Length 2 takes the single
// colon by the weighted form, with no difference saturation needed.
Ideal partition_ideal(const Partition& a, unsigned d, std::uint32_t p);

// Strategy-6 companion: generators saturated by the differences only.
Ideal partition_ideal_vandermonde_only(const Partition& a, unsigned d, std::uint32_t p);

}  // namespace fermat

#endif  // FERMAT_FERMAT_IDEALS_HH
