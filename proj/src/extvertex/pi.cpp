#include "hlpos/extvertex/pi.hpp"

#include "hlpos/symfunc/pieri.hpp"

#include <iostream>
#include <map>
#include <mutex>

namespace hlpos::extvertex {

using combinat::Partition;
using exactalg::Rational;
using exactalg::standard_env;

namespace {

// V state (bit i-1 set iff color 1) -> W state with the same colors.
WState lift(std::uint32_t v, int n) {
  WState w = 0;
  for (int i = n; i >= 1; --i) w = 3 * w + (((v >> (i - 1)) & 1u) ? 1u : 2u);
  return w;
}

std::uint32_t drop(WState w, int n) {
  std::uint32_t v = 0;
  for (int i = 0; i < n; ++i, w /= 3) {
    if (w % 3 != 2) v |= 1u << i;
  }
  return v;
}

}  // namespace

PolyOperator inclusion(int n) {
  const std::size_t vdim = std::size_t{1} << n;
  PolyOperator op(wstate_count(n), vdim);
  const MultiPoly one(standard_env(n), Rational(1));
  for (std::size_t v = 0; v < vdim; ++v) op.set_column(v, {{lift(static_cast<std::uint32_t>(v), n), one}});
  return op;
}

PolyOperator projection(int n) {
  const std::size_t wdim = wstate_count(n);
  PolyOperator op(std::size_t{1} << n, wdim);
  const MultiPoly one(standard_env(n), Rational(1));
  for (std::size_t w = 0; w < wdim; ++w) op.set_column(w, {{drop(static_cast<WState>(w), n), one}});
  return op;
}

PolyOperator pi_lambda(const Partition& lambda, int n, std::string* warning) {
  const std::size_t vdim = std::size_t{1} << n;
  const Partition conj = lambda.conjugate();
  if (conj[0] > n) {
    const std::string msg = "Pi_" + lambda.to_string() + " vanishes for n = " + std::to_string(n) +
                            ": the first column is longer than n";
    if (warning) {
      *warning = msg;
    } else {
      std::clog << "warning: " << msg << '\n';
    }
    return PolyOperator(vdim, vdim);
  }
  const auto& h = transfer_H(n);
  PolyOperator acc = inclusion(n);
  int k = 0;
  for (int j = lambda[0]; j >= 1; --j) {
    acc = exactalg::compose(h.block(k, conj[j - 1]).op, acc);
    k = conj[j - 1];
  }
  return exactalg::compose(projection(n), acc);
}

const PolyOperator& pi_lambda_cached(const Partition& lambda, int n) {
  static std::mutex mutex;
  static std::map<std::pair<Partition, int>, PolyOperator> memo;
  {
    std::lock_guard lock(mutex);
    if (auto it = memo.find({lambda, n}); it != memo.end()) return it->second;
  }
  PolyOperator op = pi_lambda(lambda, n);
  std::lock_guard lock(mutex);
  return memo.try_emplace({lambda, n}, std::move(op)).first->second;
}

PolyOperator pieri_operator_rhs(const Partition& lambda, int r, int n) {
  const std::size_t vdim = std::size_t{1} << n;
  auto env = standard_env(n);
  PolyOperator sum(vdim, vdim);
  for (const auto& mu : combinat::horizontal_strips_above(lambda, r, n)) {
    const MultiPoly phi = symfunc::pieri_phi(lambda, mu).to_multipoly(env);
    sum += pi_lambda_cached(mu, n).transform([&](const MultiPoly& c) { return c * phi; });
  }
  return sum;
}

SeriesOperator pieri_series_rhs(const Partition& lambda, int n, std::size_t order) {
  auto env = standard_env(n);
  const std::size_t vdim = std::size_t{1} << n;
  const MultiPoly one(env, Rational(1));
  const MultiPoly t = MultiPoly::variable(env, 0);
  auto prefactor = TruncSeries::constant(env, order, one);
  for (int i = 1; i <= n; ++i) {
    const MultiPoly ai = MultiPoly::variable(env, static_cast<std::size_t>(i));
    prefactor = prefactor * TruncSeries::linear(env, order, one, -ai) *
                TruncSeries::linear(env, order, one, -(t * ai)).inverse();
  }
  SeriesOperator sum(vdim, vdim);
  for (std::size_t r = 0; r <= order; ++r) {
    const PolyOperator term = pieri_operator_rhs(lambda, static_cast<int>(r), n);
    sum += term.transform([&](const MultiPoly& c) {
      std::vector<MultiPoly> coeffs(order + 1, MultiPoly(env));
      coeffs[r] = c;
      return TruncSeries(order, std::move(coeffs)) * prefactor;
    });
  }
  return sum;
}

}  // namespace hlpos::extvertex
