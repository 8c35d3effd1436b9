#pragma once

#include "hlpos/exactalg/upoly.hpp"
#include "hlpos/symfunc/basic.hpp"

#include <map>

namespace hlpos::symfunc {

using exactalg::RatFuncT;
using exactalg::UPoly;

// Multiplicity of P_mu in P_lambda * g_r: the product over columns
// i = 1..mu_1 with mu'_i = lambda'_i + 1 and mu'_{i+1} = lambda'_{i+1} of
// (1 - t^{mu'_i - lambda'_{i+1}}); zero unless mu/lambda is a horizontal
// strip.
UPoly pieri_phi(const Partition& lambda, const Partition& mu);

// The same multiplicity written as a product of per-column ratios over
// i = 1..mu_1 (with lambda'_0 = mu'_0).
RatFuncT pieri_phi_ratio_form(const Partition& lambda, const Partition& mu);

// (1 - t [mu_1 > lambda_1]) times the ratio-form factors for i = 1..lambda_1.
// Agrees with pieri_phi except when mu_1 > lambda_1 and the column
// i = lambda_1 also gains a box, where the factor for that column is counted
// twice; e.g. lambda = (1), mu = (2,1) gives (1-t)(1-t^2) instead of 1-t.
RatFuncT pieri_phi_head_form(const Partition& lambda, const Partition& mu);

// Multiplicity of P_mu in P_lambda * e_r:
// prod_{i=1..lambda_1} (t;t)_{mu'_i - mu'_{i+1}} /
//   ((t;t)_{mu'_i - lambda'_i} (t;t)_{lambda'_i - mu'_{i+1}});
// zero unless mu/lambda is a vertical strip.
RatFuncT pieri_psi_prime(const Partition& lambda, const Partition& mu);

// Coefficients of a symmetric polynomial in the P-basis, found by repeatedly
// cancelling the lexicographically largest a-monomial a^mu with c(t) P_mu.
// Throws std::invalid_argument if the leading exponent is not a partition.
std::map<Partition, UPoly> expand_in_hl_basis(const SymPoly& f, int n);

}  // namespace hlpos::symfunc
