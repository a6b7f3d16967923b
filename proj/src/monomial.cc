#include "fermat/monomial.hh"

#include <algorithm>
#include <numeric>

#include "fermat/errors.hh"

namespace fermat {

Monomial::Monomial(std::vector<std::uint32_t> exps)
    : exps_(std::move(exps)),
      total_degree_(std::accumulate(exps_.begin(), exps_.end(), std::uint32_t{0})) {}

Monomial Monomial::unit(std::size_t var_count) {
  return Monomial(std::vector<std::uint32_t>(var_count, 0));
}

Monomial Monomial::variable(std::size_t var_count, std::size_t index, std::uint32_t power) {
  if (index >= var_count) throw StructuralError("variable index out of range");
  std::vector<std::uint32_t> e(var_count, 0);
  e[index] = power;
  return Monomial(std::move(e));
}

bool Monomial::divides(const Monomial& other) const {
  if (var_count() != other.var_count()) throw StructuralError("monomial variable counts differ");
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

bool Monomial::coprime_to(const Monomial& other) const {
  if (var_count() != other.var_count()) throw StructuralError("monomial variable counts differ");
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] != 0 && other.exps_[i] != 0) return false;
  return true;
}

Monomial Monomial::times(const Monomial& other) const {
  if (var_count() != other.var_count()) throw StructuralError("monomial variable counts differ");
  std::vector<std::uint32_t> e(exps_.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = exps_[i] + other.exps_[i];
  return Monomial(std::move(e));
}

Monomial Monomial::quotient_by(const Monomial& other) const {
  if (var_count() != other.var_count()) throw StructuralError("monomial variable counts differ");
  std::vector<std::uint32_t> e(exps_.size());
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (exps_[i] < other.exps_[i]) throw StructuralError("monomial quotient is not exact");
    e[i] = exps_[i] - other.exps_[i];
  }
  return Monomial(std::move(e));
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  if (a.var_count() != b.var_count()) throw StructuralError("monomial variable counts differ");
  std::vector<std::uint32_t> e(a.exps_.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(a.exps_[i], b.exps_[i]);
  return Monomial(std::move(e));
}

namespace {

// Grevlex on a window [lo, hi) of the exponent vectors: higher total degree
// wins; ties break by the rightmost differing exponent, smaller exponent wins.
std::strong_ordering grevlex_window(const Monomial& a, const Monomial& b, std::size_t lo,
                                    std::size_t hi) {
  std::uint32_t da = 0, db = 0;
  for (std::size_t i = lo; i < hi; ++i) {
    da += a.exponent(i);
    db += b.exponent(i);
  }
  if (da != db) return da < db ? std::strong_ordering::less : std::strong_ordering::greater;
  for (std::size_t i = hi; i-- > lo;) {
    std::uint32_t ea = a.exponent(i), eb = b.exponent(i);
    if (ea != eb) return ea > eb ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

}  // namespace

std::strong_ordering compare_monomials(const Monomial& a, const Monomial& b,
                                       const MonomialOrder& ord) {
  if (a.var_count() != b.var_count()) throw StructuralError("monomial variable counts differ");
  const std::size_t v = a.var_count();
  switch (ord.kind) {
    case MonomialOrder::Kind::grevlex:
      return grevlex_window(a, b, 0, v);
    case MonomialOrder::Kind::block_elimination: {
      std::size_t k = std::min<std::size_t>(ord.block, v);
      if (auto c = grevlex_window(a, b, 0, k); c != std::strong_ordering::equal) return c;
      return grevlex_window(a, b, k, v);
    }
  }
  throw StructuralError("unknown monomial order");
}

}  // namespace fermat
