#include "fermat/hilbert.hh"

#include <algorithm>
#include <numeric>

#include "fermat/deadline.hh"
#include "fermat/errors.hh"

namespace fermat {

namespace {

using Poly1 = std::vector<std::int64_t>;  // dense univariate, index = degree of t

Poly1 mul(const Poly1& a, const Poly1& b) {
  Poly1 r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

void add_shifted(Poly1& into, const Poly1& other, std::size_t shift) {
  if (into.size() < other.size() + shift) into.resize(other.size() + shift, 0);
  for (std::size_t i = 0; i < other.size(); ++i) into[i + shift] += other[i];
}

// Keep only the minimal generators.
void minimalize(std::vector<Monomial>& gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    return a.total_degree() < b.total_degree();
  });
  std::vector<Monomial> out;
  for (Monomial& m : gens) {
    bool redundant = false;
    for (const Monomial& kept : out) {
      if (kept.divides(m)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) out.push_back(std::move(m));
  }
  gens = std::move(out);
}

Poly1 numerator_rec(std::vector<Monomial> gens, std::size_t var_count) {
  check_deadline();
  minimalize(gens);
  if (gens.empty()) return {1};
  for (const Monomial& m : gens)
    if (m.is_unit()) return {0};

  bool pairwise_coprime = true;
  for (std::size_t i = 0; i < gens.size() && pairwise_coprime; ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (!gens[i].coprime_to(gens[j])) {
        pairwise_coprime = false;
        break;
      }
  if (pairwise_coprime) {
    Poly1 r{1};
    for (const Monomial& m : gens) {
      Poly1 f(m.total_degree() + 1, 0);
      f[0] = 1;
      f[m.total_degree()] = -1;
      r = mul(r, f);
    }
    return r;
  }

  // Pivot on the busiest variable, at its smallest positive exponent.
  std::vector<std::size_t> counts(var_count, 0);
  for (const Monomial& m : gens)
    for (std::size_t v = 0; v < var_count; ++v)
      if (m.exponent(v) > 0) ++counts[v];
  std::size_t pivot_var =
      std::distance(counts.begin(), std::max_element(counts.begin(), counts.end()));
  std::uint32_t e = 0;
  for (const Monomial& m : gens) {
    std::uint32_t me = m.exponent(pivot_var);
    if (me > 0 && (e == 0 || me < e)) e = me;
  }
  Monomial pivot = Monomial::variable(var_count, pivot_var, e);

  std::vector<Monomial> plus = gens;
  plus.push_back(pivot);
  std::vector<Monomial> colon;
  colon.reserve(gens.size());
  for (const Monomial& m : gens) {
    std::vector<std::uint32_t> q(var_count);
    for (std::size_t v = 0; v < var_count; ++v) {
      std::uint32_t sub = v == pivot_var ? e : 0;
      q[v] = m.exponent(v) > sub ? m.exponent(v) - sub : 0;
    }
    colon.emplace_back(std::move(q));
  }

  Poly1 result = numerator_rec(std::move(plus), var_count);
  add_shifted(result, numerator_rec(std::move(colon), var_count), e);
  return result;
}

void trim(Poly1& p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
}

}  // namespace

std::vector<std::int64_t> hilbert_numerator(std::vector<Monomial> generators,
                                            std::size_t var_count) {
  for (const Monomial& m : generators)
    if (m.var_count() != var_count)
      throw StructuralError("monomial does not match the variable count");
  Poly1 n = numerator_rec(std::move(generators), var_count);
  trim(n);
  return n;
}

HilbertSummary analyze_hilbert_numerator(std::vector<std::int64_t> numerator,
                                         std::size_t var_count) {
  trim(numerator);
  HilbertSummary s;
  if (numerator.size() == 1 && numerator[0] == 0) {
    s.empty = true;
    s.cone_dimension = 0;
    s.degree = 0;
    return s;
  }
  // Divide by (1-t) while t=1 is a root: Q[i] = N[i] + Q[i-1].
  std::size_t roots = 0;
  while (std::accumulate(numerator.begin(), numerator.end(), std::int64_t{0}) == 0) {
    Poly1 q(numerator.size() - 1, 0);
    std::int64_t carry = 0;
    for (std::size_t i = 0; i + 1 < numerator.size(); ++i) {
      carry += numerator[i];
      q[i] = carry;
    }
    numerator = std::move(q);
    trim(numerator);
    ++roots;
  }
  if (roots > var_count) throw StructuralError("numerator divisible beyond (1-t)^n");
  s.cone_dimension = var_count - roots;
  std::int64_t value = std::accumulate(numerator.begin(), numerator.end(), std::int64_t{0});
  if (value < 0) throw StructuralError("negative Hilbert multiplicity");
  s.degree = static_cast<std::uint64_t>(value);
  return s;
}

}  // namespace fermat
