#include "fermat/polynomial.hh"

#include <algorithm>
#include <sstream>

#include "fermat/errors.hh"

namespace fermat {

RingPtr make_ring(std::uint32_t p, std::vector<std::string> var_names, MonomialOrder order) {
  if (var_names.empty()) throw StructuralError("a ring needs at least one variable");
  return std::make_shared<const Ring>(PrimeField(p), std::move(var_names), order);
}

RingPtr make_ring(std::uint32_t p, std::size_t var_count, const std::string& prefix,
                  unsigned first_index, MonomialOrder order) {
  std::vector<std::string> names;
  names.reserve(var_count);
  for (std::size_t i = 0; i < var_count; ++i)
    names.push_back(prefix + std::to_string(first_index + i));
  return make_ring(p, std::move(names), order);
}

void require_same_ring(const Polynomial& f, const Polynomial& g) {
  if (f.ring() == g.ring()) return;
  if (!f.ring()->compatible_with(*g.ring()))
    throw StructuralError("polynomials live in different rings");
}

Polynomial Polynomial::zero(RingPtr ring) { return Polynomial(std::move(ring), {}); }

Polynomial Polynomial::constant(RingPtr ring, PrimeField::Element c) {
  if (c == 0) return zero(std::move(ring));
  std::vector<Term> t{{Monomial::unit(ring->var_count()), c}};
  return Polynomial(std::move(ring), std::move(t));
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index, std::uint32_t power) {
  if (power == 0) return constant(std::move(ring), 1);
  std::vector<Term> t{{Monomial::variable(ring->var_count(), index, power), 1}};
  return Polynomial(std::move(ring), std::move(t));
}

Polynomial Polynomial::term(RingPtr ring, PrimeField::Element c, Monomial m) {
  if (m.var_count() != ring->var_count())
    throw StructuralError("monomial does not fit the ring");
  if (c == 0) return zero(std::move(ring));
  std::vector<Term> t{{std::move(m), c}};
  return Polynomial(std::move(ring), std::move(t));
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
  const auto& ord = ring->order();
  for (const Term& t : terms)
    if (t.mono.var_count() != ring->var_count())
      throw StructuralError("term does not fit the ring");
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
    return compare_monomials(a.mono, b.mono, ord) == std::strong_ordering::greater;
  });
  std::vector<Term> merged;
  merged.reserve(terms.size());
  const PrimeField& F = ring->field();
  for (Term& t : terms) {
    if (!merged.empty() && merged.back().mono == t.mono) {
      merged.back().coeff = F.add(merged.back().coeff, F.from_uint(t.coeff));
    } else {
      t.coeff = F.from_uint(t.coeff);
      merged.push_back(std::move(t));
    }
  }
  std::erase_if(merged, [](const Term& t) { return t.coeff == 0; });
  return Polynomial(std::move(ring), std::move(merged));
}

const Term& Polynomial::lead_term() const {
  if (terms_.empty()) throw StructuralError("the zero polynomial has no lead term");
  return terms_.front();
}

std::optional<std::uint32_t> Polynomial::degree() const {
  if (terms_.empty()) return std::nullopt;
  std::uint32_t d = 0;
  for (const Term& t : terms_) d = std::max(d, t.mono.total_degree());
  return d;
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  const std::uint32_t d = terms_.front().mono.total_degree();
  for (const Term& t : terms_)
    if (t.mono.total_degree() != d) return false;
  return true;
}

Polynomial Polynomial::operator-() const {
  const PrimeField& F = ring_->field();
  std::vector<Term> t = terms_;
  for (Term& x : t) x.coeff = F.neg(x.coeff);
  return Polynomial(ring_, std::move(t));
}

Polynomial Polynomial::scaled(PrimeField::Element c) const {
  if (c == 0) return zero(ring_);
  if (c == 1) return *this;
  const PrimeField& F = ring_->field();
  std::vector<Term> t = terms_;
  for (Term& x : t) x.coeff = F.mul(x.coeff, c);
  return Polynomial(ring_, std::move(t));
}

Polynomial Polynomial::monic() const {
  if (terms_.empty()) return *this;
  return scaled(ring_->field().inv(terms_.front().coeff));
}

Polynomial Polynomial::times_term(PrimeField::Element c, const Monomial& m) const {
  if (c == 0) return zero(ring_);
  const PrimeField& F = ring_->field();
  std::vector<Term> t;
  t.reserve(terms_.size());
  for (const Term& x : terms_) t.push_back({x.mono.times(m), F.mul(x.coeff, c)});
  return Polynomial(ring_, std::move(t));
}

Polynomial Polynomial::subtract_scaled(PrimeField::Element c, const Monomial& m,
                                       const Polynomial& g) const {
  require_same_ring(*this, g);
  if (c == 0) return *this;
  const PrimeField& F = ring_->field();
  std::vector<Term> out;
  out.reserve(terms_.size() + g.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < g.terms_.size()) {
    Monomial gm = g.terms_[j].mono.times(m);
    auto cmp = compare_monomials(terms_[i].mono, gm, ring_->order());
    if (cmp == std::strong_ordering::greater) {
      out.push_back(terms_[i++]);
    } else if (cmp == std::strong_ordering::less) {
      out.push_back({std::move(gm), F.neg(F.mul(c, g.terms_[j].coeff))});
      ++j;
    } else {
      PrimeField::Element v = F.sub(terms_[i].coeff, F.mul(c, g.terms_[j].coeff));
      if (v != 0) out.push_back({terms_[i].mono, v});
      ++i;
      ++j;
    }
  }
  for (; i < terms_.size(); ++i) out.push_back(terms_[i]);
  for (; j < g.terms_.size(); ++j)
    out.push_back({g.terms_[j].mono.times(m), F.neg(F.mul(c, g.terms_[j].coeff))});
  return Polynomial(ring_, std::move(out));
}

PrimeField::Element Polynomial::evaluate(std::span<const PrimeField::Element> point) const {
  if (point.size() != ring_->var_count())
    throw StructuralError("evaluation point has the wrong length");
  const PrimeField& F = ring_->field();
  PrimeField::Element acc = 0;
  for (const Term& t : terms_) {
    PrimeField::Element v = t.coeff;
    for (std::size_t i = 0; i < point.size(); ++i) {
      std::uint32_t e = t.mono.exponent(i);
      if (e != 0) v = F.mul(v, F.pow(point[i], e));
    }
    acc = F.add(acc, v);
  }
  return acc;
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const Term& t : terms_) {
    if (!first) out << " + ";
    first = false;
    bool printed = false;
    if (t.coeff != 1 || t.mono.is_unit()) {
      out << t.coeff;
      printed = true;
    }
    for (std::size_t i = 0; i < t.mono.var_count(); ++i) {
      std::uint32_t e = t.mono.exponent(i);
      if (e == 0) continue;
      if (printed) out << "*";
      out << ring_->var_name(i);
      if (e > 1) out << "^" << e;
      printed = true;
    }
  }
  return out.str();
}

bool Polynomial::operator==(const Polynomial& other) const {
  if (ring_ != other.ring_) require_same_ring(*this, other);
  if (terms_.size() != other.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].coeff != other.terms_[i].coeff || !(terms_[i].mono == other.terms_[i].mono))
      return false;
  return true;
}

Polynomial operator+(const Polynomial& f, const Polynomial& g) {
  require_same_ring(f, g);
  return f.subtract_scaled(f.ring()->field().neg(1), Monomial::unit(f.ring()->var_count()), g);
}

Polynomial operator-(const Polynomial& f, const Polynomial& g) {
  require_same_ring(f, g);
  return f.subtract_scaled(1, Monomial::unit(f.ring()->var_count()), g);
}

Polynomial operator*(const Polynomial& f, const Polynomial& g) {
  require_same_ring(f, g);
  const PrimeField& F = f.ring()->field();
  std::vector<Term> prod;
  prod.reserve(f.term_count() * g.term_count());
  for (const Term& a : f.terms())
    for (const Term& b : g.terms())
      prod.push_back({a.mono.times(b.mono), F.mul(a.coeff, b.coeff)});
  return Polynomial::from_terms(f.ring(), std::move(prod));
}

Polynomial pow(const Polynomial& f, std::uint32_t e) {
  Polynomial acc = Polynomial::constant(f.ring(), 1);
  Polynomial base = f;
  while (e != 0) {
    if (e & 1) acc = acc * base;
    if ((e >>= 1) != 0) base = base * base;
  }
  return acc;
}

Polynomial transplant(const Polynomial& f, const RingPtr& target) {
  if (f.ring()->field() != target->field() || f.ring()->var_count() != target->var_count())
    throw StructuralError("transplant requires matching modulus and variable count");
  std::vector<Term> terms(f.terms().begin(), f.terms().end());
  return Polynomial::from_terms(target, std::move(terms));
}

}  // namespace fermat
