#pragma once

#include "hlpos/exactalg/multipoly.hpp"
#include "hlpos/exactalg/parallel.hpp"
#include "hlpos/exactalg/sparse_operator.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace hlpos::extvertex {

using exactalg::Exec;
using exactalg::MultiPoly;
using PolyOperator = exactalg::SparseOperator<MultiPoly>;

// Basis vector of W^{(x)n}, W = <0, 1, 2>: base-3 number whose digit i-1 is
// the color of e_i. The grade is the number of 0 digits.
using WState = std::uint32_t;

std::size_t wstate_count(int n);
int wstate_digit(WState w, int i);  // color at position i (1-based)
int wstate_grade(WState w, int n);
WState wstate_from_string(const std::string& s);
std::string wstate_to_string(WState w, int n);  // e.g. "0120"

// Pair-counter state {x, y}; both components are nonnegative.
struct PairState {
  int x = 0;
  int y = 0;
  auto operator<=>(const PairState&) const = default;
};

struct ExtOutcome {
  int top;
  PairState right;
  MultiPoly weight;
};

// R_ext(color x {x,y}) with spectral parameter a, read as
// R(bottom x left) = sum weight (top x right):
//   0 x {x,y} -> a 0{x,y} + (t^y - t^{x+y}) 1{x-1,y} + (1 - t^y) 2{x,y-1}
//   1 x {x,y} -> a 0{x+1,y} + t^y 1{x,y} + (1 - t^y) 2{x+1,y-1}
//   2 x {x,y} -> a 0{x,y+1} + 2{x,y}
// Outcomes with a negative pair component, or a zero weight, are omitted.
// `a` and `t` must share an environment.
std::vector<ExtOutcome> r_ext(int color, PairState p, const MultiPoly& a, const MultiPoly& t);

// Restriction of H to W_{n,k1} -> W_{n,k2}, stored on the full 3^n basis:
// columns outside grade k1 are empty and every row has grade k2.
struct GradedOperator {
  int source_grade = 0;
  int target_grade = 0;
  PolyOperator op;
};

// Transfer operator H of one row of n extended vertices: left boundary
// {0,0}, column i uses a_i, right boundary summed over. Coefficients live in
// standard_env(n). Conservation (terminal x = #1(in) - #1(out), likewise y
// for color 2) and x, y <= n are asserted on every path; a violation throws
// std::logic_error.
class ExtTransfer {
 public:
  explicit ExtTransfer(int n, Exec exec = Exec::parallel);

  int n() const { return n_; }
  const PolyOperator& full() const { return full_; }
  // Zero operator unless 0 <= k1 <= k2 <= n.
  GradedOperator block(int k1, int k2) const;

 private:
  int n_;
  PolyOperator full_;
};

// Memoized per n; safe to call concurrently.
const ExtTransfer& transfer_H(int n);

namespace reference {

// Walks the vertex paths separately for every (input, output) pair without
// merging partial states; serial and slow.
PolyOperator transfer_H(int n);

}  // namespace reference
}  // namespace hlpos::extvertex
