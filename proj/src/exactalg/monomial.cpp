#include "hlpos/exactalg/monomial.hpp"

namespace hlpos::exactalg {

Monomial Monomial::from_exponents(std::span<const unsigned> exponents) {
  if (exponents.size() > kMaxVars) throw std::invalid_argument("too many variables for a packed monomial");
  std::uint64_t key = 0;
  unsigned total = 0;
  for (std::size_t v = 0; v < exponents.size(); ++v) {
    if (exponents[v] > kMaxDegree) throw std::overflow_error("exponent exceeds 255");
    total += exponents[v];
    key |= static_cast<std::uint64_t>(exponents[v]) << shift(v);
  }
  if (total > kMaxDegree) throw std::overflow_error("monomial degree exceeds 255");
  key |= static_cast<std::uint64_t>(total) << 56;
  return Monomial(key);
}

Monomial Monomial::variable(std::size_t var, unsigned power) {
  if (var >= kMaxVars) throw std::invalid_argument("variable index out of range");
  if (power > kMaxDegree) throw std::overflow_error("exponent exceeds 255");
  return Monomial((static_cast<std::uint64_t>(power) << 56) |
                  (static_cast<std::uint64_t>(power) << shift(var)));
}

std::vector<unsigned> Monomial::exponents(std::size_t arity) const {
  std::vector<unsigned> e(arity);
  for (std::size_t v = 0; v < arity; ++v) e[v] = exponent(v);
  return e;
}

bool Monomial::divisible_by(Monomial divisor) const {
  for (unsigned b = 0; b < 64; b += 8) {
    if (((key_ >> b) & 0xffu) < ((divisor.key_ >> b) & 0xffu)) return false;
  }
  return true;
}

Monomial Monomial::operator/(Monomial divisor) const {
  if (!divisible_by(divisor)) throw std::domain_error("monomial does not divide");
  return Monomial(key_ - divisor.key_);
}

Monomial Monomial::without(std::size_t var) const {
  const std::uint64_t e = exponent(var);
  return Monomial(key_ - (e << shift(var)) - (e << 56));
}

}  // namespace hlpos::exactalg
