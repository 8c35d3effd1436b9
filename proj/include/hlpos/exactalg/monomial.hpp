#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace hlpos::exactalg {

// Exponent vector packed into one 64-bit word: the top byte holds the total
// degree and the next seven bytes hold the exponents of variables 0..6, most
// significant first. Integer comparison of the packed word is therefore the
// graded lexicographic order with variable 0 largest, and monomial
// multiplication is word addition.
class Monomial {
 public:
  static constexpr std::size_t kMaxVars = 7;
  static constexpr unsigned kMaxDegree = 255;

  constexpr Monomial() = default;

  static Monomial from_exponents(std::span<const unsigned> exponents);
  static Monomial variable(std::size_t var, unsigned power = 1);

  constexpr std::uint64_t key() const { return key_; }
  constexpr unsigned degree() const { return static_cast<unsigned>(key_ >> 56); }
  constexpr unsigned exponent(std::size_t var) const {
    return static_cast<unsigned>((key_ >> shift(var)) & 0xffu);
  }
  constexpr bool is_one() const { return key_ == 0; }

  std::vector<unsigned> exponents(std::size_t arity) const;

  // Overflow of the total degree is reported instead of silently carrying
  // into the neighbouring byte.
  Monomial operator*(Monomial other) const {
    if (degree() + other.degree() > kMaxDegree) {
      throw std::overflow_error("monomial degree exceeds 255");
    }
    return Monomial(key_ + other.key_);
  }

  bool divisible_by(Monomial divisor) const;
  Monomial operator/(Monomial divisor) const;

  // Same monomial with exponent of `var` set to zero.
  Monomial without(std::size_t var) const;

  constexpr auto operator<=>(const Monomial&) const = default;

 private:
  constexpr explicit Monomial(std::uint64_t key) : key_(key) {}
  static constexpr unsigned shift(std::size_t var) {
    return static_cast<unsigned>(48 - 8 * var);
  }

  std::uint64_t key_ = 0;
};

}  // namespace hlpos::exactalg
