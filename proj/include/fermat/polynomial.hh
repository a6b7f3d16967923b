#ifndef FERMAT_POLYNOMIAL_HH
#define FERMAT_POLYNOMIAL_HH

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fermat/monomial.hh"
#include "fermat/prime_field.hh"

namespace fermat {

// Ring metadata shared by every polynomial: F_p, the variable names and the
// monomial order. Immutable; polynomials hold it by shared_ptr.
class Ring {
public:
  Ring(PrimeField field, std::vector<std::string> var_names, MonomialOrder order)
      : field_(field), names_(std::move(var_names)), order_(order) {}

  const PrimeField& field() const { return field_; }
  std::size_t var_count() const { return names_.size(); }
  const MonomialOrder& order() const { return order_; }
  const std::string& var_name(std::size_t i) const { return names_[i]; }
  const std::vector<std::string>& var_names() const { return names_; }

  bool compatible_with(const Ring& other) const {
    return field_ == other.field_ && names_.size() == other.names_.size() &&
           order_ == other.order_;
  }

private:
  PrimeField field_;
  std::vector<std::string> names_;
  MonomialOrder order_;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(std::uint32_t p, std::vector<std::string> var_names,
                  MonomialOrder order = MonomialOrder::grevlex());
// Variables named <prefix><first_index>, ..., count of them.
RingPtr make_ring(std::uint32_t p, std::size_t var_count, const std::string& prefix,
                  unsigned first_index, MonomialOrder order = MonomialOrder::grevlex());

struct Term {
  Monomial mono;
  PrimeField::Element coeff;
};

// Sparse multivariate polynomial over F_p. Terms are strictly descending in
// the ring's monomial order, never zero, never duplicated; the zero
// polynomial is the empty term list. Immutable after construction.
class Polynomial {
public:
  static Polynomial zero(RingPtr ring);
  static Polynomial constant(RingPtr ring, PrimeField::Element c);
  static Polynomial variable(RingPtr ring, std::size_t index, std::uint32_t power = 1);
  static Polynomial term(RingPtr ring, PrimeField::Element c, Monomial m);
  // Sorts, merges duplicates mod p, drops zeros.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const { return ring_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  std::span<const Term> terms() const { return terms_; }
  const Term& lead_term() const;

  // Largest total degree among terms; nullopt for the zero polynomial.
  std::optional<std::uint32_t> degree() const;
  bool is_homogeneous() const;

  Polynomial operator-() const;
  Polynomial scaled(PrimeField::Element c) const;
  Polynomial monic() const;
  // this * (c * m); linear time, order is multiplicative.
  Polynomial times_term(PrimeField::Element c, const Monomial& m) const;
  // this - c * m * g; the workhorse of polynomial reduction.
  Polynomial subtract_scaled(PrimeField::Element c, const Monomial& m, const Polynomial& g) const;

  PrimeField::Element evaluate(std::span<const PrimeField::Element> point) const;

  std::string str() const;

  bool operator==(const Polynomial& other) const;

private:
  Polynomial(RingPtr ring, std::vector<Term> terms)
      : ring_(std::move(ring)), terms_(std::move(terms)) {}

  RingPtr ring_;
  std::vector<Term> terms_;
};

Polynomial operator+(const Polynomial& f, const Polynomial& g);
Polynomial operator-(const Polynomial& f, const Polynomial& g);
Polynomial operator*(const Polynomial& f, const Polynomial& g);

Polynomial pow(const Polynomial& f, std::uint32_t e);

// Re-sorts f's terms under the target ring's order. The target must have the
// same modulus and variable count.
Polynomial transplant(const Polynomial& f, const RingPtr& target);

void require_same_ring(const Polynomial& f, const Polynomial& g);

}  // namespace fermat

#endif  // FERMAT_POLYNOMIAL_HH
