#ifndef FERMAT_PRIME_FIELD_HH
#define FERMAT_PRIME_FIELD_HH

#include <cstdint>

#include "fermat/errors.hh"

namespace fermat {

bool is_prime(std::uint32_t n);

// The prime field F_p with single-word elements stored in [0, p-1].
// The engine never works below p = 101 (see next_screened_prime for the
// full admissibility test tied to a problem instance).
class PrimeField {
public:
  using Element = std::uint32_t;
  static constexpr std::uint32_t kMinModulus = 101;

  explicit PrimeField(std::uint32_t p) : p_(p) {
    if (p < kMinModulus || !is_prime(p))
      throw StructuralError("modulus must be a prime >= 101, got " + std::to_string(p));
  }

  std::uint32_t modulus() const { return p_; }

  Element add(Element a, Element b) const {
    std::uint64_t s = std::uint64_t{a} + b;
    return s >= p_ ? static_cast<Element>(s - p_) : static_cast<Element>(s);
  }
  Element sub(Element a, Element b) const { return a >= b ? a - b : a + p_ - b; }
  Element neg(Element a) const { return a == 0 ? 0 : p_ - a; }
  Element mul(Element a, Element b) const {
    return static_cast<Element>((std::uint64_t{a} * b) % p_);
  }
  Element pow(Element base, std::uint64_t e) const {
    Element r = 1;
    while (e != 0) {
      if (e & 1) r = mul(r, base);
      base = mul(base, base);
      e >>= 1;
    }
    return r;
  }
  Element inv(Element a) const {
    if (a == 0) throw StructuralError("division by zero in F_p");
    return pow(a, p_ - 2);
  }

  Element from_uint(std::uint64_t v) const { return static_cast<Element>(v % p_); }
  Element from_int(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    return static_cast<Element>(r);
  }

  bool operator==(const PrimeField& other) const = default;

private:
  std::uint32_t p_;
};

}  // namespace fermat

#endif  // FERMAT_PRIME_FIELD_HH
