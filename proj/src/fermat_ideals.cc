#include "fermat/fermat_ideals.hh"

#include <algorithm>

#include "fermat/errors.hh"

namespace fermat {

RingPtr coordinate_ring(std::uint32_t p, unsigned n) {
  if (n < 1) throw StructuralError("projective dimension must be at least 1");
  return make_ring(p, n + 1, "x", 0);
}

RingPtr stratum_ring(std::uint32_t p, unsigned s) {
  if (s < 1) throw StructuralError("stratum ring needs at least one variable");
  return make_ring(p, s, "z", 1);
}

DataVector DataVector::all_ones(const PrimeField& field, unsigned n_plus_1) {
  std::vector<PrimeField::Element> u(n_plus_1, 1);
  PrimeField::Element sum = field.from_uint(n_plus_1);
  if (sum == 0) throw StructuralError("all-ones data vector has zero sum mod p");
  return DataVector(std::move(u), sum);
}

DataVector DataVector::sample(const PrimeField& field, unsigned n_plus_1, SplitMix64& rng) {
  const std::uint32_t p = field.modulus();
  for (;;) {
    std::vector<PrimeField::Element> u(n_plus_1);
    PrimeField::Element sum = 0;
    for (auto& e : u) {
      e = static_cast<PrimeField::Element>(1 + rng.bounded(p - 1));
      sum = field.add(sum, e);
    }
    if (sum != 0) return DataVector(std::move(u), sum);
  }
}

DataVector DataVector::from_entries(const PrimeField& field,
                                    std::vector<PrimeField::Element> entries) {
  PrimeField::Element sum = 0;
  for (PrimeField::Element e : entries) {
    if (e == 0 || e >= field.modulus())
      throw StructuralError("data vector entries must lie in [1, p-1]");
    sum = field.add(sum, e);
  }
  if (sum == 0) throw StructuralError("data vector must have nonzero coordinate sum");
  return DataVector(std::move(entries), sum);
}

bool DataVector::is_all_ones() const {
  return std::all_of(u_.begin(), u_.end(), [](PrimeField::Element e) { return e == 1; });
}

Polynomial fermat_polynomial(const RingPtr& ring, unsigned d) {
  if (d < 2) throw StructuralError("Fermat degree must be at least 2");
  std::vector<Term> terms;
  terms.reserve(ring->var_count());
  for (std::size_t i = 0; i < ring->var_count(); ++i)
    terms.push_back({Monomial::variable(ring->var_count(), i, d), 1});
  return Polynomial::from_terms(ring, std::move(terms));
}

namespace {

void require_strict_triple(const RingPtr& ring, unsigned i, unsigned j, unsigned k) {
  if (!(i < j && j < k) || k >= ring->var_count())
    throw StructuralError("minor needs column indices i < j < k within the ring");
}

// u_i x_j x_k (x_k^{d-1} - x_j^{d-1}) + cyclic, straight from the expansion.
Polynomial expanded_minor(const RingPtr& ring, const DataVector& u, unsigned d, unsigned i,
                          unsigned j, unsigned k) {
  const std::size_t v = ring->var_count();
  const PrimeField& F = ring->field();
  auto piece = [&](unsigned w, unsigned a, unsigned b) {
    // u_w x_a x_b (x_b^{d-1} - x_a^{d-1})
    std::vector<Term> terms;
    std::vector<std::uint32_t> hi(v, 0), lo(v, 0);
    hi[a] = 1;
    hi[b] = d;
    lo[a] = d;
    lo[b] = 1;
    terms.push_back({Monomial(std::move(hi)), u.entry(w)});
    terms.push_back({Monomial(std::move(lo)), F.neg(u.entry(w))});
    return Polynomial::from_terms(ring, std::move(terms));
  };
  return piece(i, j, k) + piece(j, k, i) + piece(k, i, j);
}

}  // namespace

Polynomial symmetric_sum(const RingPtr& ring, std::span<const std::size_t> indices, unsigned m) {
  if (indices.empty()) throw StructuralError("symmetric sum over an empty index set");
  for (std::size_t idx : indices)
    if (idx >= ring->var_count()) throw StructuralError("symmetric sum index out of range");
  std::vector<Term> terms;
  std::vector<std::uint32_t> exps(ring->var_count(), 0);
  // Enumerate all compositions of m over the index set.
  auto rec = [&](auto&& self, std::size_t pos, unsigned remaining) -> void {
    if (pos + 1 == indices.size()) {
      exps[indices[pos]] = remaining;
      terms.push_back({Monomial(exps), 1});
      exps[indices[pos]] = 0;
      return;
    }
    for (unsigned e = 0; e <= remaining; ++e) {
      exps[indices[pos]] = e;
      self(self, pos + 1, remaining - e);
    }
    exps[indices[pos]] = 0;
  };
  rec(rec, 0, m);
  return Polynomial::from_terms(ring, std::move(terms));
}

Polynomial factored_minor(const RingPtr& ring, unsigned d, unsigned i, unsigned j, unsigned k) {
  require_strict_triple(ring, i, j, k);
  if (d < 2) throw StructuralError("minor needs degree at least 2");
  auto diff = [&](unsigned a, unsigned b) {
    return Polynomial::variable(ring, a) - Polynomial::variable(ring, b);
  };
  Polynomial vandermonde = diff(i, j) * diff(j, k) * diff(k, i);
  const std::size_t idx[3] = {i, j, k};
  return vandermonde * symmetric_sum(ring, idx, d - 2);
}

Polynomial minor(const RingPtr& ring, const DataVector& u, unsigned d, unsigned i, unsigned j,
                 unsigned k) {
  require_strict_triple(ring, i, j, k);
  if (u.size() != ring->var_count())
    throw StructuralError("data vector length does not match the ring");
  if (d < 2) throw StructuralError("minor needs degree at least 2");
  if (u.is_all_ones()) return factored_minor(ring, d, i, j, k);
  return expanded_minor(ring, u, d, i, j, k);
}

Ideal critical_ideal(unsigned n, unsigned d, const DataVector& u, std::uint32_t p) {
  if (n < 2) throw StructuralError("critical ideal needs n >= 2 (no 3x3 minors otherwise)");
  RingPtr ring = coordinate_ring(p, n);
  if (u.size() != n + 1) throw StructuralError("data vector length must be n+1");
  std::vector<Polynomial> gens;
  gens.push_back(fermat_polynomial(ring, d));
  for (unsigned i = 0; i + 2 <= n; ++i)
    for (unsigned j = i + 1; j + 1 <= n; ++j)
      for (unsigned k = j + 1; k <= n; ++k) gens.push_back(minor(ring, u, d, i, j, k));
  return Ideal(ring, std::move(gens));
}

namespace {

Polynomial coordinate_sum(const RingPtr& ring) {
  std::vector<Term> terms;
  for (std::size_t i = 0; i < ring->var_count(); ++i)
    terms.push_back({Monomial::variable(ring->var_count(), i), 1});
  return Polynomial::from_terms(ring, std::move(terms));
}

}  // namespace

Ideal remove_arrangement(const Ideal& ideal) {
  return saturate(ideal, coordinate_sum(ideal.ring()));
}

Ideal arrangement_slice_ideal(unsigned n, unsigned d, std::uint32_t p) {
  if (n < 1) throw StructuralError("slice ideal needs n >= 1");
  if (d < 2) throw StructuralError("slice ideal needs degree >= 2");
  RingPtr ring = coordinate_ring(p, n);
  const PrimeField& F = ring->field();
  std::vector<Polynomial> gens;
  gens.push_back(coordinate_sum(ring));
  gens.push_back(fermat_polynomial(ring, d));
  for (unsigned k = 0; k < n; ++k) {
    for (unsigned h = k + 1; h <= n; ++h) {
      // x_k x_h (x_h^{d-1} - x_k^{d-1})
      std::vector<std::uint32_t> hi(n + 1, 0), lo(n + 1, 0);
      hi[k] = 1;
      hi[h] = d;
      lo[k] = d;
      lo[h] = 1;
      std::vector<Term> terms;
      terms.push_back({Monomial(std::move(hi)), 1});
      terms.push_back({Monomial(std::move(lo)), F.neg(1)});
      gens.push_back(Polynomial::from_terms(ring, std::move(terms)));
    }
  }
  return Ideal(ring, std::move(gens));
}

std::vector<Polynomial> partition_ideal_generators(const RingPtr& ring, const Partition& a,
                                                   unsigned d) {
  const unsigned s = a.length();
  if (ring->var_count() != s) throw StructuralError("ring size must match the partition length");
  const PrimeField& F = ring->field();
  std::vector<Term> weighted;
  for (unsigned i = 0; i < s; ++i) {
    PrimeField::Element w = F.from_uint(a.parts()[i]);
    if (w == 0) throw BadPrimeError("prime divides a partition part");
    weighted.push_back({Monomial::variable(s, i, d), w});
  }
  std::vector<Polynomial> gens;
  gens.push_back(Polynomial::from_terms(ring, std::move(weighted)));
  for (unsigned i = 0; i + 2 < s; ++i)
    for (unsigned j = i + 1; j + 1 < s; ++j)
      for (unsigned k = j + 1; k < s; ++k) gens.push_back(factored_minor(ring, d, i, j, k));
  return gens;
}

Polynomial weighted_linear_form(const RingPtr& ring, const Partition& a) {
  const PrimeField& F = ring->field();
  std::vector<Term> terms;
  for (unsigned i = 0; i < a.length(); ++i) {
    PrimeField::Element w = F.from_uint(a.parts()[i]);
    if (w == 0) throw BadPrimeError("prime divides a partition part");
    terms.push_back({Monomial::variable(a.length(), i), w});
  }
  return Polynomial::from_terms(ring, std::move(terms));
}

namespace {

Ideal saturate_by_differences(Ideal ideal) {
  const RingPtr& ring = ideal.ring();
  const std::size_t s = ring->var_count();
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = i + 1; j < s; ++j)
      ideal = saturate(ideal, Polynomial::variable(ring, i) - Polynomial::variable(ring, j));
  return ideal;
}

}  // namespace

Ideal partition_ideal(const Partition& a, unsigned d, std::uint32_t p) {
  const unsigned s = a.length();
  if (s < 2) throw StructuralError("partition strata need length at least 2");
  RingPtr ring = stratum_ring(p, s);
  std::vector<Polynomial> gens = partition_ideal_generators(ring, a, d);
  Polynomial line = weighted_linear_form(ring, a);
  if (s == 2) {
    // Two distinct values: the minors vanish identically and the only point
    // with z_1 = z_2 on the weighted Fermat curve is the origin, so the
    // single colon by the weighted form already yields the stratum ideal.
    return colon(Ideal(ring, std::move(gens)), line);
  }
  Ideal ideal = saturate(Ideal(ring, std::move(gens)), line);
  return saturate_by_differences(std::move(ideal));
}

Ideal partition_ideal_vandermonde_only(const Partition& a, unsigned d, std::uint32_t p) {
  const unsigned s = a.length();
  if (s < 2) throw StructuralError("partition strata need length at least 2");
  RingPtr ring = stratum_ring(p, s);
  std::vector<Polynomial> gens = partition_ideal_generators(ring, a, d);
  Ideal ideal(ring, std::move(gens));
  if (s == 2) return ideal;
  return saturate_by_differences(std::move(ideal));
}

}  // namespace fermat
