#include <doctest.h>

#include <vector>

#include "fermat/errors.hh"
#include "fermat/fermat_ideals.hh"
#include "fermat/groebner.hh"
#include "test_support.hh"

using namespace fermat;

namespace {

constexpr std::uint32_t kP = 32003;

// Independent oracle: the 3x3 determinant
//   | u_i   u_j   u_k  |
//   | x_i   x_j   x_k  |
//   | x_i^d x_j^d x_k^d|
// expanded by cofactors with plain polynomial arithmetic.
Polynomial determinant_minor(const RingPtr& r, const DataVector& u, unsigned d, unsigned i,
                             unsigned j, unsigned k) {
  auto x = [&](unsigned v, std::uint32_t e) { return Polynomial::variable(r, v, e); };
  auto cof = [&](unsigned a, unsigned b) { return x(a, 1) * x(b, d) - x(b, 1) * x(a, d); };
  auto scal = [&](unsigned w) { return Polynomial::constant(r, u.entry(w)); };
  return scal(i) * cof(j, k) - scal(j) * cof(i, k) + scal(k) * cof(i, j);
}

Polynomial permute_vars(const Polynomial& f, const std::vector<std::size_t>& perm) {
  std::vector<Term> terms;
  for (const Term& t : f.terms()) {
    std::vector<std::uint32_t> e(f.ring()->var_count(), 0);
    for (std::size_t v = 0; v < e.size(); ++v) e[perm[v]] = t.mono.exponent(v);
    terms.push_back({Monomial(std::move(e)), t.coeff});
  }
  return Polynomial::from_terms(f.ring(), std::move(terms));
}

}  // namespace

TEST_CASE("fermat_polynomial instances") {
  RingPtr r3 = coordinate_ring(kP, 2);
  Polynomial f22 = fermat_polynomial(r3, 2);
  CHECK(f22 == Polynomial::variable(r3, 0, 2) + Polynomial::variable(r3, 1, 2) +
                   Polynomial::variable(r3, 2, 2));
  RingPtr r2 = coordinate_ring(kP, 1);
  CHECK(fermat_polynomial(r2, 3) ==
        Polynomial::variable(r2, 0, 3) + Polynomial::variable(r2, 1, 3));
  // The all-ones point stays off the hypersurface for admissible primes.
  for (unsigned n = 1; n <= 6; ++n) {
    RingPtr r = coordinate_ring(kP, n);
    std::vector<PrimeField::Element> ones(n + 1, 1);
    CHECK(fermat_polynomial(r, 4).evaluate(ones) == (n + 1) % kP);
  }
  CHECK_THROWS_AS(fermat_polynomial(r3, 1), StructuralError);
}

TEST_CASE("minor matches the determinant oracle") {
  SplitMix64 rng(21);
  PrimeField F(kP);
  for (unsigned n : {2u, 3u, 4u}) {
    RingPtr r = coordinate_ring(kP, n);
    for (unsigned d : {2u, 3u, 5u}) {
      DataVector u = DataVector::sample(F, n + 1, rng);
      DataVector ones = DataVector::all_ones(F, n + 1);
      for (unsigned i = 0; i + 2 <= n; ++i)
        for (unsigned j = i + 1; j + 1 <= n; ++j)
          for (unsigned k = j + 1; k <= n; ++k) {
            CHECK(minor(r, u, d, i, j, k) == determinant_minor(r, u, d, i, j, k));
            CHECK(minor(r, ones, d, i, j, k) == determinant_minor(r, ones, d, i, j, k));
          }
    }
  }
}

TEST_CASE("minor vanishes on repeated coordinates and freezes the spec point") {
  RingPtr r = coordinate_ring(kP, 2);
  PrimeField F(kP);
  DataVector u = DataVector::from_entries(F, {7, 11, 13});
  Polynomial m = minor(r, u, 4, 0, 1, 2);
  PrimeField::Element same[] = {5, 5, 5};
  CHECK(m.evaluate(same) == 0);

  // All-ones, d = 3 at (1,2,3): the determinant oracle gives
  // det[[1,1,1],[1,2,3],[1,8,27]] = 12, and the factored form 2 * (1+2+3).
  DataVector ones = DataVector::all_ones(F, 3);
  PrimeField::Element point[] = {1, 2, 3};
  CHECK(determinant_minor(r, ones, 3, 0, 1, 2).evaluate(point) == 12);
  CHECK(minor(r, ones, 3, 0, 1, 2).evaluate(point) == 12);

  CHECK_THROWS_AS(minor(r, ones, 3, 0, 0, 2), StructuralError);
  CHECK_THROWS_AS(minor(r, ones, 3, 0, 1, 3), StructuralError);
}

TEST_CASE("factored_minor: vandermonde at d=2, antisymmetry, oracle equality") {
  for (unsigned s : {3u, 4u, 5u}) {
    RingPtr r = stratum_ring(kP, s);
    PrimeField F(kP);
    DataVector ones = DataVector::all_ones(F, s);
    for (unsigned d = 2; d <= 6; ++d) {
      for (unsigned i = 0; i + 2 < s; ++i)
        for (unsigned j = i + 1; j + 1 < s; ++j)
          for (unsigned k = j + 1; k < s; ++k) {
            Polynomial fac = factored_minor(r, d, i, j, k);
            CHECK(fac == determinant_minor(r, ones, d, i, j, k));
            // Swapping two of the three variables flips the sign.
            std::vector<std::size_t> perm(s);
            for (std::size_t v = 0; v < s; ++v) perm[v] = v;
            std::swap(perm[i], perm[j]);
            CHECK(permute_vars(fac, perm) == -fac);
          }
    }
  }
  RingPtr r3 = stratum_ring(kP, 3);
  Polynomial v = (Polynomial::variable(r3, 0) - Polynomial::variable(r3, 1)) *
                 (Polynomial::variable(r3, 1) - Polynomial::variable(r3, 2)) *
                 (Polynomial::variable(r3, 2) - Polynomial::variable(r3, 0));
  CHECK(factored_minor(r3, 2, 0, 1, 2) == v);
}

TEST_CASE("symmetric_sum: definition cases and term counts") {
  RingPtr r = stratum_ring(kP, 4);
  std::size_t all[] = {0, 1, 2, 3};
  CHECK(symmetric_sum(r, all, 0) == Polynomial::constant(r, 1));

  std::size_t two[] = {0, 1};
  Polynomial expect = Polynomial::variable(r, 0, 2) +
                      Polynomial::variable(r, 0) * Polynomial::variable(r, 1) +
                      Polynomial::variable(r, 1, 2);
  CHECK(symmetric_sum(r, two, 2) == expect);

  for (unsigned m = 0; m <= 5; ++m) {
    std::size_t idx3[] = {0, 2, 3};
    CHECK(symmetric_sum(r, idx3, m).term_count() == binomial_checked(m + 2, 2));
    CHECK(symmetric_sum(r, all, m).term_count() == binomial_checked(m + 3, 3));
  }
  std::vector<std::size_t> empty;
  CHECK_THROWS_AS(symmetric_sum(r, empty, 2), StructuralError);
}

TEST_CASE("lemma: deleting one variable from a symmetric sum") {
  // z_{I\k}^{(m)} - z_{I\h}^{(m)} = (z_h - z_k) z_I^{(m-1)}
  RingPtr r = stratum_ring(kP, 6);
  SplitMix64 rng(22);
  for (int iter = 0; iter < 60; ++iter) {
    unsigned size = 3 + static_cast<unsigned>(rng.bounded(4));
    std::vector<std::size_t> pool{0, 1, 2, 3, 4, 5};
    for (std::size_t v = 5; v > 0; --v) std::swap(pool[v], pool[rng.bounded(v + 1)]);
    std::vector<std::size_t> I(pool.begin(), pool.begin() + size);
    std::size_t h = I[rng.bounded(size)];
    std::size_t k = h;
    while (k == h) k = I[rng.bounded(size)];
    unsigned m = 1 + static_cast<unsigned>(rng.bounded(5));

    std::vector<std::size_t> no_k, no_h;
    for (std::size_t v : I) {
      if (v != k) no_k.push_back(v);
      if (v != h) no_h.push_back(v);
    }
    Polynomial lhs = symmetric_sum(r, no_k, m) - symmetric_sum(r, no_h, m);
    Polynomial rhs = (Polynomial::variable(r, h) - Polynomial::variable(r, k)) *
                     symmetric_sum(r, I, m - 1);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("critical_ideal: generator counts and the table cell (2,3)") {
  PrimeField F(kP);
  SplitMix64 rng(23);
  {
    Ideal I = critical_ideal(2, 2, DataVector::all_ones(F, 3), kP);
    CHECK(I.generators().size() == 2);
  }
  {
    Ideal I = critical_ideal(3, 2, DataVector::sample(F, 4, rng), kP);
    CHECK(I.generators().size() == 5);
  }
  {
    Ideal I = critical_ideal(2, 3, DataVector::sample(F, 3, rng), kP);
    CHECK(degree_projective(remove_arrangement(I)) == 9);
  }
  CHECK_THROWS_AS(critical_ideal(1, 3, DataVector::all_ones(F, 2), kP), StructuralError);
}

TEST_CASE("remove_arrangement: table cell (3,2) and the no-op case") {
  PrimeField F(kP);
  SplitMix64 rng(24);
  {
    Ideal I = critical_ideal(3, 2, DataVector::sample(F, 4, rng), kP);
    CHECK(degree_projective(remove_arrangement(I)) == 14);
  }
  {
    // No arrangement point: x0^2 + x1^2 in P^1 misses x0 + x1 = 0 for good p.
    RingPtr r = coordinate_ring(kP, 1);
    Ideal I(r, {fermat_polynomial(r, 2)});
    CHECK(degree_projective(I) == 2);
    CHECK(degree_projective(remove_arrangement(I)) == 2);
  }
}

TEST_CASE("removing the arrangement by one form or by all n+2 forms agrees") {
  PrimeField F(kP);
  SplitMix64 rng(25);
  for (auto [n, d] : {std::pair{2u, 3u}, std::pair{3u, 2u}, std::pair{2u, 4u}}) {
    Ideal I = critical_ideal(n, d, DataVector::sample(F, n + 1, rng), kP);
    std::uint64_t fast = degree_projective(remove_arrangement(I));
    Ideal brute = I;
    const RingPtr& r = I.ring();
    for (std::size_t v = 0; v <= n; ++v) brute = saturate(brute, Polynomial::variable(r, v));
    std::vector<Term> sum_terms;
    for (std::size_t v = 0; v <= n; ++v) sum_terms.push_back({Monomial::variable(n + 1, v), 1});
    brute = saturate(brute, Polynomial::from_terms(r, sum_terms));
    CHECK(degree_projective(brute) == fast);
  }
}

TEST_CASE("arrangement_slice_ideal: u-independence and the strategy-4 difference") {
  PrimeField F(kP);
  SplitMix64 rng(26);
  {
    Ideal slice = arrangement_slice_ideal(2, 3, kP);
    CHECK(slice.generators().size() == 2 + binomial_checked(3, 2));
    const RingPtr& r = slice.ring();
    std::vector<Term> sum_terms;
    for (std::size_t v = 0; v < 3; ++v) sum_terms.push_back({Monomial::variable(3, v), 1});
    Polynomial plane = Polynomial::from_terms(r, sum_terms);
    for (int rep = 0; rep < 3; ++rep) {
      DataVector u = DataVector::sample(F, 3, rng);
      Ideal I = critical_ideal(2, 3, u, kP).plus({plane});
      CHECK(ideal_equals(slice, I));
    }
  }
  {
    DataVector u = DataVector::sample(F, 3, rng);
    Ideal I = critical_ideal(2, 3, u, kP);
    std::uint64_t whole = degree_projective(I);
    std::uint64_t sliced = degree_projective(arrangement_slice_ideal(2, 3, kP));
    CHECK(whole - sliced == 9);
  }
}

TEST_CASE("partition_ideal: stratum degrees for d = 3") {
  CHECK(degree_projective(partition_ideal(Partition({1, 1}), 3, kP)) == 2);
  CHECK(degree_projective(partition_ideal(Partition({2, 1}), 3, kP)) == 3);
  CHECK(degree_projective(partition_ideal(Partition({1, 1, 1}), 3, kP)) == 0);
  CHECK_THROWS_AS(partition_ideal(Partition({3}), 3, kP), StructuralError);
}

TEST_CASE("partition_ideal length 2 follows the two-branch degree rule") {
  for (unsigned a1 = 1; a1 <= 4; ++a1)
    for (unsigned a2 = 1; a2 <= a1; ++a2)
      for (unsigned d = 2; d <= 5; ++d) {
        std::uint64_t expect = (a1 == a2 && d % 2 == 1) ? d - 1 : d;
        CHECK(degree_projective(partition_ideal(Partition({a1, a2}), d, kP)) == expect);
      }
}

TEST_CASE("proposition: symmetric sums lie in the stratum ideal") {
  // z_I^{(d-w+1)} reduces to zero mod I_a^d for every index set of size w.
  for (unsigned d = 3; d <= 4; ++d) {
    for (const Partition& a : enumerate_partitions(5, d)) {
      if (a.length() < 3) continue;
      Ideal I = partition_ideal(a, d, kP);
      const auto& basis = I.groebner_basis();
      unsigned s = a.length();
      for (unsigned w = 3; w <= s; ++w) {
        std::vector<std::size_t> idx(w);
        // All w-subsets of {0..s-1}.
        std::vector<unsigned> choose(w);
        for (unsigned v = 0; v < w; ++v) choose[v] = v;
        for (;;) {
          for (unsigned v = 0; v < w; ++v) idx[v] = choose[v];
          Polynomial zs = symmetric_sum(I.ring(), idx, d - w + 1);
          CHECK(reduce(zs, basis).is_zero());
          unsigned v = w;
          while (v > 0 && choose[v - 1] == s - w + v - 1) --v;
          if (v == 0) break;
          ++choose[v - 1];
          for (unsigned z = v; z < w; ++z) choose[z] = choose[z - 1] + 1;
        }
      }
    }
  }
}

TEST_CASE("stratum ideal is symmetric under swapping equal-weight variables") {
  for (auto [parts, d] : {std::pair{std::vector<unsigned>{2, 2}, 3u},
                          std::pair{std::vector<unsigned>{2, 1, 1}, 3u},
                          std::pair{std::vector<unsigned>{1, 1, 1}, 4u}}) {
    Partition a(parts);
    Ideal I = partition_ideal(a, d, kP);
    // Find a pair of equal parts and swap those variables in every generator.
    for (unsigned i = 0; i + 1 < a.length(); ++i) {
      if (a.parts()[i] != a.parts()[i + 1]) continue;
      std::vector<std::size_t> perm(a.length());
      for (std::size_t v = 0; v < perm.size(); ++v) perm[v] = v;
      std::swap(perm[i], perm[i + 1]);
      std::vector<Polynomial> swapped;
      for (const Polynomial& g : I.generators()) swapped.push_back(permute_vars(g, perm));
      CHECK(ideal_equals(I, Ideal(I.ring(), swapped)));
      break;
    }
  }
}

TEST_CASE("flatness consequence on small instances") {
  PrimeField F(kP);
  SplitMix64 rng(27);
  for (auto [n, d] : {std::pair{2u, 3u}, std::pair{3u, 2u}}) {
    Ideal all_ones = critical_ideal(n, d, DataVector::all_ones(F, n + 1), kP);
    Ideal random_u = critical_ideal(n, d, DataVector::sample(F, n + 1, rng), kP);
    CHECK(degree_projective(remove_arrangement(all_ones)) ==
          degree_projective(remove_arrangement(random_u)));
  }
}

TEST_CASE("bezout bound for the all-distinct plane stratum") {
  for (unsigned d = 3; d <= 7; ++d)
    CHECK(degree_projective(partition_ideal(Partition({1, 1, 1}), d, kP)) <=
          std::uint64_t{d} * (d - 2));
}

TEST_CASE("data vector invariants") {
  PrimeField F(kP);
  CHECK_THROWS_AS(DataVector::from_entries(F, {1, 0, 2}), StructuralError);
  CHECK_THROWS_AS(DataVector::from_entries(F, {kP - 1, 1}), StructuralError);
  SplitMix64 rng(28);
  for (int rep = 0; rep < 50; ++rep) {
    DataVector u = DataVector::sample(F, 5, rng);
    CHECK(u.sum() != 0);
    for (auto e : u.entries()) CHECK(e != 0);
  }
}
