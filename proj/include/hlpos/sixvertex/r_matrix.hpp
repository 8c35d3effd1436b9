#pragma once

#include "hlpos/exactalg/multipoly.hpp"
#include "hlpos/exactalg/sparse_operator.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hlpos::sixvertex {

using exactalg::MultiPoly;

// Colors of V are 1 and 2.
struct VertexOutcome {
  int top;
  int right;
  MultiPoly weight;
};

// Stochastic R-matrix with spectral parameter a = p/q, all weights scaled by
// the common denominator q - t p so that they are polynomials:
//   R(2x2) = 2x2
//   R(2x1) = (1-a)/(1-ta) 2x1 + (1-t)a/(1-ta) 1x2
//   R(1x2) = (1-t)/(1-ta) 2x1 + t(1-a)/(1-ta) 1x2
//   R(1x1) = 1x1
// read as R(bottom x left) = sum weight (top x right).
class RMatrix {
 public:
  // p, q and t must share an environment.
  RMatrix(MultiPoly p, MultiPoly q, MultiPoly t);

  const MultiPoly& denominator() const { return den_; }
  // Scaled outcomes of R(bottom x left).
  const std::vector<VertexOutcome>& outcomes(int bottom, int left) const;
  // Scaled weight of bottom x left -> top x right (zero if not listed).
  MultiPoly weight(int bottom, int left, int top, int right) const;

  // Multiplies one scaled weight by `factor` (mutation testing).
  void perturb(int bottom, int left, int top, int right, const MultiPoly& factor);

 private:
  MultiPoly den_;
  std::vector<VertexOutcome> table_[2][2];  // indexed [bottom-1][left-1]
};

// 8x8 operator on V x V x V acting with `r` on tensor factors (first, second)
// (1-based, first < second or first > second), identity on the third. Basis
// index: bit f-1 set iff factor f has color 1.
exactalg::SparseOperator<MultiPoly> embed_r(const RMatrix& r, int first, int second);

struct YangBaxterReport {
  bool holds = false;
  // First differing entry (row, column) of the two composites and the
  // difference of the scaled entries there.
  std::optional<std::pair<std::size_t, std::size_t>> witness;
  std::string difference;
  std::size_t differing_entries = 0;
};

// Checks R12(a) R13(b) R23(b/a) = R23(b/a) R13(b) R12(a) symbolically in
// (t, a, b), with every R scaled to polynomial weights (both sides carry the
// same scalar). When `mutate` is set, the weight 2x1 -> 2x1 of R13 is
// multiplied by (1+t) on both sides, which must break the identity.
YangBaxterReport yang_baxter_check(bool mutate = false);

}  // namespace hlpos::sixvertex
