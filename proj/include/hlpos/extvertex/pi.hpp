#pragma once

#include "hlpos/combinat/partition.hpp"
#include "hlpos/extvertex/model.hpp"
#include "hlpos/exactalg/series.hpp"

#include <string>

namespace hlpos::extvertex {

using exactalg::TruncSeries;
using SeriesOperator = exactalg::SparseOperator<TruncSeries>;

// i^{(x)n}: V^{(x)n} -> W^{(x)n}, colors 1 and 2 kept, grade 0. V states use
// the sixvertex encoding (bit i-1 set iff color 1).
PolyOperator inclusion(int n);
// pi^{(x)n}: W^{(x)n} -> V^{(x)n}, 0 -> 1.
PolyOperator projection(int n);

// pi o H_{l'_2,l'_1} o ... o H_{l'_m,l'_{m-1}} o H_{0,l'_m} o i, applied
// right to left. If l'_1 > n the result is the zero operator and a message
// is stored in *warning (or written to std::clog when warning is null).
PolyOperator pi_lambda(const combinat::Partition& lambda, int n, std::string* warning = nullptr);

// Memoized pi_lambda for l'_1 <= n.
const PolyOperator& pi_lambda_cached(const combinat::Partition& lambda, int n);

// sum over mu with mu/lambda a horizontal r-strip and l(mu) <= n of
// phi_{mu/lambda} Pi_mu.
PolyOperator pieri_operator_rhs(const combinat::Partition& lambda, int r, int n);

// prod_i (1 - alpha a_i)/(1 - t alpha a_i) sum_{r <= order} alpha^r
// pieri_operator_rhs(lambda, r, n), the right-hand side of
// T(alpha) Pi_lambda truncated after alpha^order.
SeriesOperator pieri_series_rhs(const combinat::Partition& lambda, int n, std::size_t order);

}  // namespace hlpos::extvertex
