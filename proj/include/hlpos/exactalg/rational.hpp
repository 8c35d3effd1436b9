#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace hlpos::exactalg {

// Arbitrary-precision rational. Arithmetic results are canonical (positive
// denominator, reduced); values built from a numerator/denominator pair are
// not, so every container canonicalizes what it is handed.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational canonical(Rational q) {
  q.canonicalize();
  return q;
}

// Accepts "p", "-p", "p/q". Throws std::invalid_argument on malformed input
// or a zero denominator.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);

}  // namespace hlpos::exactalg
