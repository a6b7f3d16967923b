#ifndef FERMAT_HILBERT_HH
#define FERMAT_HILBERT_HH

#include <cstdint>
#include <vector>

#include "fermat/monomial.hh"

namespace fermat {

// Coefficients of the numerator N(t) of the Hilbert series
// N(t) / (1-t)^{var_count} of R/I for the monomial ideal I generated by the
// given monomials. Computed by the classic pivot recursion
//   N(I) = N(I + (p)) + t^{deg p} * N(I : p)
// with products over pairwise-coprime generators as the base case.
std::vector<std::int64_t> hilbert_numerator(std::vector<Monomial> generators,
                                            std::size_t var_count);

struct HilbertSummary {
  // Krull dimension of the affine cone R/I (projective dimension + 1).
  std::size_t cone_dimension = 0;
  // N(1) after dividing out every (1-t) factor; the scheme degree when the
  // cone dimension is 1, and the empty-scheme marker 0 when it is 0.
  std::uint64_t degree = 0;
  bool empty = false;  // I = (1)
};

HilbertSummary analyze_hilbert_numerator(std::vector<std::int64_t> numerator,
                                         std::size_t var_count);

}  // namespace fermat

#endif  // FERMAT_HILBERT_HH
