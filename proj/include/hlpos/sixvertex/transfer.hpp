#pragma once

#include "hlpos/exactalg/parallel.hpp"
#include "hlpos/exactalg/series.hpp"
#include "hlpos/exactalg/sparse_operator.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace hlpos::sixvertex {

using exactalg::Exec;
using exactalg::MultiPoly;
using exactalg::TruncSeries;

// Basis vector of V^{(x)n}: bit i-1 set iff v_i = 1. The grade is the
// number of 1's.
using VState = std::uint32_t;
using SeriesOperator = exactalg::SparseOperator<TruncSeries>;
// Coefficients in standard_env(n) = (t, a1, ..., an).
using PolyOperator = exactalg::SparseOperator<MultiPoly>;

int grade(VState v);
std::string vstate_to_string(VState v, int n);  // e.g. "1212"

// Outcomes of one vertex at column i with spectral parameter alpha*a_i, as
// series in alpha truncated after `order`.
struct SeriesVertexOutcome {
  int top;
  int right;
  TruncSeries weight;
};
std::vector<SeriesVertexOutcome> series_vertex(int bottom, int left, int column, int n, std::size_t order);

// T(alpha): row of n vertices, left boundary 1, the column-i vertex uses
// alpha*a_i, right boundary summed over. Column v is the image of v.
SeriesOperator transfer_T(int n, std::size_t order, Exec exec = Exec::parallel);
// prod_i (1 - t alpha a_i)/(1 - alpha a_i) T(alpha).
SeriesOperator transfer_T_tilde(int n, std::size_t order, Exec exec = Exec::parallel);

// Coefficient of alpha^k in a series operator.
PolyOperator series_coefficient(const SeriesOperator& op, std::size_t k);
// Lifts a polynomial operator to constant series.
SeriesOperator constant_series(const PolyOperator& op, std::size_t order);

// T_k, the coefficient of alpha^k in T~(alpha); T_0 = Id. Memoized per
// (n, k); safe to call concurrently.
const PolyOperator& transfer_Tk(int k, int n);

namespace reference {

// Enumerates all 2^n right-edge color sequences explicitly and multiplies
// the vertex weights of each complete path, serially.
SeriesOperator transfer_T(int n, std::size_t order);

}  // namespace reference
}  // namespace hlpos::sixvertex
