#ifndef FERMAT_MONOMIAL_HH
#define FERMAT_MONOMIAL_HH

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

namespace fermat {

// A power product x_0^{e_0} ... x_{v-1}^{e_{v-1}} with its total degree cached.
class Monomial {
public:
  explicit Monomial(std::vector<std::uint32_t> exps);

  static Monomial unit(std::size_t var_count);
  static Monomial variable(std::size_t var_count, std::size_t index, std::uint32_t power = 1);

  std::size_t var_count() const { return exps_.size(); }
  std::uint32_t exponent(std::size_t i) const { return exps_[i]; }
  std::span<const std::uint32_t> exponents() const { return exps_; }
  std::uint32_t total_degree() const { return total_degree_; }
  bool is_unit() const { return total_degree_ == 0; }

  bool divides(const Monomial& other) const;
  bool coprime_to(const Monomial& other) const;
  Monomial times(const Monomial& other) const;
  // Componentwise difference; caller guarantees divisibility.
  Monomial quotient_by(const Monomial& other) const;
  static Monomial lcm(const Monomial& a, const Monomial& b);

  bool operator==(const Monomial& other) const { return exps_ == other.exps_; }

private:
  std::vector<std::uint32_t> exps_;
  std::uint32_t total_degree_;
};

// Total multiplicative orders on monomials. block_elimination(k) compares the
// leading block of k variables first (grevlex within the block), then the
// rest (grevlex again), so the first k variables dominate and can be
// projected away from a Groebner basis.
struct MonomialOrder {
  enum class Kind { grevlex, block_elimination };

  Kind kind = Kind::grevlex;
  std::uint32_t block = 0;  // size of the eliminated block

  static MonomialOrder grevlex() { return {Kind::grevlex, 0}; }
  static MonomialOrder block_elimination(std::uint32_t k) {
    return {Kind::block_elimination, k};
  }

  bool operator==(const MonomialOrder& other) const = default;
};

std::strong_ordering compare_monomials(const Monomial& a, const Monomial& b,
                                       const MonomialOrder& ord);

}  // namespace fermat

#endif  // FERMAT_MONOMIAL_HH
