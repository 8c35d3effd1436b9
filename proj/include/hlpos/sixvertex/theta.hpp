#pragma once

#include "hlpos/combinat/partition.hpp"
#include "hlpos/sixvertex/transfer.hpp"
#include "hlpos/symfunc/gexpansion.hpp"

#include <string>

namespace hlpos::sixvertex {

struct ThetaResult {
  PolyOperator op;
  // False when some entry was not divisible by the common t-denominator of
  // the expansion, i.e. the image is not polynomial in t.
  bool exact = true;
  std::string diagnostic;
};

// Theta(g_k) = T_k extended multiplicatively and linearly: every g-monomial
// becomes the composite of its T_k, coefficients are brought to a common
// denominator L(t), and each entry is divided exactly by L(t) at the end.
// Composites are memoized per (monomial, n).
ThetaResult theta(const symfunc::GExpansion& expansion, int n, Exec exec = Exec::parallel);

// Theta(P_lambda) via g_expand; memoized per (lambda, n). Throws
// std::logic_error if the image is not polynomial in t.
const PolyOperator& theta_P(const combinat::Partition& lambda, int n);

// Theta of any symmetric polynomial, through its P-basis expansion.
PolyOperator theta_symmetric(const symfunc::SymPoly& f, int n);

}  // namespace hlpos::sixvertex
