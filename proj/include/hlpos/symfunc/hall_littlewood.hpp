#pragma once

#include "hlpos/combinat/tableau.hpp"
#include "hlpos/exactalg/parallel.hpp"
#include "hlpos/exactalg/series.hpp"
#include "hlpos/exactalg/upoly.hpp"
#include "hlpos/symfunc/basic.hpp"

namespace hlpos::symfunc {

using exactalg::Exec;
using exactalg::UPoly;

// prod_{k>=0} prod_{i=1..m_k} (1-t^i)/(1-t), where m_0 = n - length(lambda).
UPoly v_lambda(const Partition& lambda, int n);

// P_lambda from its defining symmetrization: the numerator
// sum_w sgn(w) w(a^lambda prod_{i<j}(a_i - t a_j)) is divided exactly by
// the Vandermonde product and by v_lambda(t). Permutation terms are summed
// in parallel under Exec::parallel. Throws std::invalid_argument when
// length(lambda) > n.
SymPoly hl_symmetrization(const Partition& lambda, int n, Exec exec = Exec::parallel);

// psi_T(t) = prod over boxes of (1 - e(s)).
UPoly tableau_weight(const combinat::Tableau& tableau);

// sum_T psi_T(t) a^T over tableaux of shape lambda with entries <= n.
SymPoly hl_tableau_sum(const Partition& lambda, int n);

// Memoized P_lambda in n variables (zero when length(lambda) > n).
const SymPoly& hl_polynomial(const Partition& lambda, int n);

// g_r = (1-t) P_(r); g_0 = 1 and g_r = 0 for r < 0.
const SymPoly& g_poly(int r, int n);

// prod_i (1 - t alpha a_i)/(1 - alpha a_i) truncated after alpha^order.
exactalg::TruncSeries g_generating_series(int n, std::size_t order);

namespace reference {

// Each permutation term rebuilt from scratch and accumulated serially.
SymPoly hl_symmetrization(const Partition& lambda, int n);

}  // namespace reference
}  // namespace hlpos::symfunc
