#include "hlpos/sixvertex/transfer.hpp"

#include "hlpos/exactalg/multipoly.hpp"

#include <bit>
#include <map>
#include <mutex>
#include <stdexcept>

namespace hlpos::sixvertex {

using exactalg::Rational;
using exactalg::standard_env;

int grade(VState v) { return std::popcount(v); }

std::string vstate_to_string(VState v, int n) {
  std::string s;
  for (int i = 0; i < n; ++i) s += (v >> i) & 1u ? '1' : '2';
  return s;
}

namespace {

std::size_t state_count(int n) {
  if (n < 1 || n > 12) throw std::invalid_argument("transfer operators need 1 <= n <= 12");
  return std::size_t{1} << n;
}

// Scaled numerators of the stochastic weights for a = alpha a_i, q = 1,
// and the series inverse of the denominator 1 - t alpha a_i.
struct ColumnWeights {
  std::vector<SeriesVertexOutcome> table[2][2];
};

ColumnWeights column_weights(int column, int n, std::size_t order) {
  auto env = standard_env(n);
  const MultiPoly one(env, Rational(1));
  const MultiPoly t = MultiPoly::variable(env, 0);
  const MultiPoly ai = MultiPoly::variable(env, static_cast<std::size_t>(column));
  auto lin = [&](const MultiPoly& c0, const MultiPoly& c1) { return TruncSeries::linear(env, order, c0, c1); };
  const TruncSeries inv_den = lin(one, -(t * ai)).inverse();
  ColumnWeights w;
  w.table[1][1] = {{2, 2, TruncSeries::constant(env, order, one)}};
  w.table[1][0] = {{2, 1, lin(one, -ai) * inv_den}, {1, 2, lin(MultiPoly(env), (one - t) * ai) * inv_den}};
  w.table[0][1] = {{2, 1, lin(one - t, MultiPoly(env)) * inv_den}, {1, 2, lin(t, -(t * ai)) * inv_den}};
  w.table[0][0] = {{1, 1, TruncSeries::constant(env, order, one)}};
  return w;
}

SeriesOperator assemble(int n, std::size_t order, Exec exec) {
  const std::size_t dim = state_count(n);
  std::vector<ColumnWeights> weights;
  for (int i = 1; i <= n; ++i) weights.push_back(column_weights(i, n, order));
  std::vector<SeriesOperator::Column> cols(dim);
  exactalg::for_each_index(dim, exec, [&](std::size_t v) {
    struct Partial {
      VState out;
      int color;
      TruncSeries weight;
    };
    std::vector<Partial> paths{{0, 1, TruncSeries::constant(standard_env(n), order, MultiPoly(standard_env(n), Rational(1)))}};
    for (int i = 1; i <= n; ++i) {
      const int bottom = (v >> (i - 1)) & 1u ? 1 : 2;
      std::vector<Partial> next;
      for (const auto& p : paths) {
        for (const auto& o : weights[i - 1].table[bottom - 1][p.color - 1]) {
          const VState out = o.top == 1 ? (p.out | (1u << (i - 1))) : p.out;
          next.push_back({out, o.right, p.weight * o.weight});
        }
      }
      paths = std::move(next);
    }
    for (auto& p : paths) cols[v].emplace_back(p.out, std::move(p.weight));
  });
  SeriesOperator op(dim, dim);
  for (std::size_t v = 0; v < dim; ++v) op.set_column(v, std::move(cols[v]));
  return op;
}

}  // namespace

std::vector<SeriesVertexOutcome> series_vertex(int bottom, int left, int column, int n, std::size_t order) {
  if (bottom < 1 || bottom > 2 || left < 1 || left > 2) throw std::invalid_argument("six-vertex colors are 1 and 2");
  if (column < 1 || column > n) throw std::invalid_argument("column outside 1..n");
  return column_weights(column, n, order).table[bottom - 1][left - 1];
}

SeriesOperator transfer_T(int n, std::size_t order, Exec exec) { return assemble(n, order, exec); }

SeriesOperator transfer_T_tilde(int n, std::size_t order, Exec exec) {
  auto env = standard_env(n);
  const MultiPoly one(env, Rational(1));
  const MultiPoly t = MultiPoly::variable(env, 0);
  auto prefactor = TruncSeries::constant(env, order, one);
  for (int i = 1; i <= n; ++i) {
    const MultiPoly ai = MultiPoly::variable(env, static_cast<std::size_t>(i));
    prefactor = prefactor * TruncSeries::linear(env, order, one, -(t * ai)) *
                TruncSeries::linear(env, order, one, -ai).inverse();
  }
  return transfer_T(n, order, exec).transform([&](const TruncSeries& s) { return s * prefactor; });
}

PolyOperator series_coefficient(const SeriesOperator& op, std::size_t k) {
  return op.transform([k](const TruncSeries& s) {
    if (k > s.order()) throw std::invalid_argument("coefficient index exceeds the truncation order");
    return s[k];
  });
}

SeriesOperator constant_series(const PolyOperator& op, std::size_t order) {
  return op.transform([order](const MultiPoly& c) { return TruncSeries::constant(c.env(), order, c); });
}

const PolyOperator& transfer_Tk(int k, int n) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, PolyOperator> memo;
  if (k < 0) throw std::invalid_argument("T_k needs k >= 0");
  {
    std::lock_guard lock(mutex);
    auto it = memo.find({k, n});
    if (it != memo.end()) return it->second;
  }
  // one series computation fills every coefficient up to k
  const SeriesOperator tilde = transfer_T_tilde(n, static_cast<std::size_t>(k));
  std::lock_guard lock(mutex);
  for (int j = 0; j <= k; ++j) memo.try_emplace({j, n}, series_coefficient(tilde, static_cast<std::size_t>(j)));
  return memo.at({k, n});
}

namespace reference {

SeriesOperator transfer_T(int n, std::size_t order) {
  const std::size_t dim = state_count(n);
  auto env = standard_env(n);
  SeriesOperator op(dim, dim);
  for (std::size_t v = 0; v < dim; ++v) {
    SeriesOperator::Column col;
    // right[i] is the horizontal color leaving column i+1; the left boundary
    // is 1. Each vertex then has at most one consistent top color.
    for (std::size_t right = 0; right < dim; ++right) {
      TruncSeries w = TruncSeries::constant(env, order, MultiPoly(env, Rational(1)));
      VState out = 0;
      int left = 1;
      bool valid = true;
      for (int i = 1; i <= n && valid; ++i) {
        const int bottom = (v >> (i - 1)) & 1u ? 1 : 2;
        const int r = (right >> (i - 1)) & 1u ? 1 : 2;
        valid = false;
        for (const auto& o : series_vertex(bottom, left, i, n, order)) {
          if (o.right != r) continue;
          w = w * o.weight;
          if (o.top == 1) out |= 1u << (i - 1);
          valid = true;
        }
        left = r;
      }
      if (valid) col.emplace_back(out, std::move(w));
    }
    op.set_column(v, std::move(col));
  }
  return op;
}

}  // namespace reference
}  // namespace hlpos::sixvertex
