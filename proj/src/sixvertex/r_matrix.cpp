#include "hlpos/sixvertex/r_matrix.hpp"

#include <stdexcept>

namespace hlpos::sixvertex {

using exactalg::Rational;
using Op = exactalg::SparseOperator<MultiPoly>;

RMatrix::RMatrix(MultiPoly p, MultiPoly q, MultiPoly t) {
  const MultiPoly one(t.env(), Rational(1));
  den_ = q - t * p;
  table_[1][1] = {{2, 2, den_}};
  table_[1][0] = {{2, 1, q - p}, {1, 2, (one - t) * p}};
  table_[0][1] = {{2, 1, (one - t) * q}, {1, 2, t * (q - p)}};
  table_[0][0] = {{1, 1, den_}};
}

const std::vector<VertexOutcome>& RMatrix::outcomes(int bottom, int left) const {
  if (bottom < 1 || bottom > 2 || left < 1 || left > 2) throw std::invalid_argument("six-vertex colors are 1 and 2");
  return table_[bottom - 1][left - 1];
}

MultiPoly RMatrix::weight(int bottom, int left, int top, int right) const {
  for (const auto& o : outcomes(bottom, left)) {
    if (o.top == top && o.right == right) return o.weight;
  }
  return MultiPoly(den_.env());
}

void RMatrix::perturb(int bottom, int left, int top, int right, const MultiPoly& factor) {
  outcomes(bottom, left);
  for (auto& o : table_[bottom - 1][left - 1]) {
    if (o.top == top && o.right == right) o.weight *= factor;
  }
}

Op embed_r(const RMatrix& r, int first, int second) {
  if (first == second || first < 1 || first > 3 || second < 1 || second > 3) {
    throw std::invalid_argument("R acts on two distinct factors among 1..3");
  }
  auto color = [](std::size_t s, int f) { return (s >> (f - 1)) & 1u ? 1 : 2; };
  auto with = [](std::size_t s, int f, int c) {
    const std::size_t bit = std::size_t{1} << (f - 1);
    return c == 1 ? (s | bit) : (s & ~bit);
  };
  Op op(8, 8);
  for (std::size_t s = 0; s < 8; ++s) {
    Op::Column col;
    for (const auto& o : r.outcomes(color(s, first), color(s, second))) {
      col.emplace_back(static_cast<Op::Index>(with(with(s, first, o.top), second, o.right)), o.weight);
    }
    op.set_column(s, std::move(col));
  }
  return op;
}

YangBaxterReport yang_baxter_check(bool mutate) {
  auto env = exactalg::make_env({"t", "a", "b"});
  const MultiPoly one(env, Rational(1));
  const MultiPoly t = MultiPoly::variable(env, 0);
  const MultiPoly a = MultiPoly::variable(env, 1);
  const MultiPoly b = MultiPoly::variable(env, 2);
  const RMatrix r_a(a, one, t);
  RMatrix r_b(b, one, t);
  const RMatrix r_ba(b, a, t);
  if (mutate) r_b.perturb(2, 1, 2, 1, one + t);
  const Op r12 = embed_r(r_a, 1, 2);
  const Op r13 = embed_r(r_b, 1, 3);
  const Op r23 = embed_r(r_ba, 2, 3);
  // operators act on the right: the product R12 R13 R23 applies R23 first
  const Op lhs = exactalg::compose(r12, exactalg::compose(r13, r23));
  const Op rhs = exactalg::compose(r23, exactalg::compose(r13, r12));
  YangBaxterReport report;
  report.witness = exactalg::first_difference(lhs, rhs);
  report.holds = !report.witness.has_value();
  if (!report.holds) {
    const auto [row, col] = *report.witness;
    report.difference = (lhs.entry(row, col) - rhs.entry(row, col)).pretty();
    const Op diff = lhs - rhs;
    report.differing_entries = diff.nonzeros();
  }
  return report;
}

}  // namespace hlpos::sixvertex
