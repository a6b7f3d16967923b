#ifndef FERMAT_GROEBNER_HH
#define FERMAT_GROEBNER_HH

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "fermat/polynomial.hh"

namespace fermat {

// A polynomial ideal given by generators, with a lazily computed reduced
// Groebner basis under the ring's order. The cached basis is write-once and
// shared between copies; every generator reduces to zero against it.
class Ideal {
public:
  Ideal(RingPtr ring, std::vector<Polynomial> generators);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return generators_; }

  // Unique reduced Groebner basis under ring()->order(); thread-safe.
  const std::vector<Polynomial>& groebner_basis() const;

  // Same ring, generators plus the extra ones; the cache is not inherited.
  Ideal plus(std::vector<Polynomial> extra) const;

private:
  struct BasisCell;
  RingPtr ring_;
  std::vector<Polynomial> generators_;
  std::shared_ptr<BasisCell> cell_;
};

// Normal form of f against the given polynomials: no term of the result is
// divisible by any lead term of the basis, and f - result lies in the ideal
// they generate.
Polynomial reduce(const Polynomial& f, std::span<const Polynomial> basis);

// lcm(lt f, lt g)/lt(f) * f - lcm/lt(g) * g after making both monic.
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);

// Unique reduced Groebner basis of the given generators under ord (the
// polynomials are re-sorted if ord differs from their ring's order).
std::vector<Polynomial> buchberger(std::span<const Polynomial> generators,
                                   const MonomialOrder& ord);

// I ∩ k[x_k, ..., x_{n-1}] as an ideal of the smaller ring obtained by
// dropping the first k variables (grevlex order there).
Ideal eliminate(const Ideal& ideal, std::size_t k);

// Stable colon (I : f^∞) via the auxiliary variable t and the generator
// t*f - 1, expressed back in the original ring.
Ideal saturate(const Ideal& ideal, const Polynomial& f);

// Single colon (I : f) = (1/f)(I ∩ (f)).
Ideal colon(const Ideal& ideal, const Polynomial& f);

// Degree of the zero-dimensional projective scheme V(I), read off the
// Hilbert polynomial of the lead-term ideal (saturation-invariant). Returns 0
// for an empty scheme; throws DimensionError on positive-dimensional input.
std::uint64_t degree_projective(const Ideal& ideal);

// True iff the reduced Groebner bases under a common order coincide.
bool ideal_equals(const Ideal& a, const Ideal& b);

}  // namespace fermat

#endif  // FERMAT_GROEBNER_HH
