#include "hlpos/sixvertex/theta.hpp"

#include "hlpos/symfunc/pieri.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace hlpos::sixvertex {

using exactalg::Rational;
using exactalg::standard_env;
using exactalg::UPoly;

namespace {

const PolyOperator& monomial_image(const symfunc::GMonomial& m, int n, Exec exec) {
  static std::mutex mutex;
  static std::map<std::pair<symfunc::GMonomial, int>, PolyOperator> memo;
  {
    std::lock_guard lock(mutex);
    auto it = memo.find({m, n});
    if (it != memo.end()) return it->second;
  }
  PolyOperator op;
  if (m.empty()) {
    op = PolyOperator::identity(std::size_t{1} << n, MultiPoly(standard_env(n), Rational(1)));
  } else {
    const symfunc::GMonomial rest(m.begin() + 1, m.end());
    op = exactalg::compose(transfer_Tk(m.front(), n), monomial_image(rest, n, exec), exec);
  }
  std::lock_guard lock(mutex);
  return memo.try_emplace({m, n}, std::move(op)).first->second;
}

}  // namespace

ThetaResult theta(const symfunc::GExpansion& expansion, int n, Exec exec) {
  auto env = standard_env(n);
  const std::size_t dim = std::size_t{1} << n;
  UPoly common(Rational(1));
  for (const auto& [m, c] : expansion.terms()) common = exactalg::lcm(common, c.den());
  PolyOperator sum(dim, dim);
  for (const auto& [m, c] : expansion.terms()) {
    const MultiPoly scale = (c.num() * common.divmod(c.den()).first).to_multipoly(env);
    sum += monomial_image(m, n, exec).scaled(scale);
  }
  ThetaResult result;
  const MultiPoly divisor = common.to_multipoly(env);
  result.op = sum.transform([&](const MultiPoly& c) {
    auto q = c.divide_exact(divisor);
    if (q) return std::move(*q);
    result.exact = false;
    return MultiPoly(env);
  });
  if (!result.exact) result.diagnostic = "entries not divisible by " + common.pretty();
  return result;
}

const PolyOperator& theta_P(const combinat::Partition& lambda, int n) {
  static std::mutex mutex;
  static std::map<std::pair<combinat::Partition, int>, PolyOperator> memo;
  {
    std::lock_guard lock(mutex);
    auto it = memo.find({lambda, n});
    if (it != memo.end()) return it->second;
  }
  ThetaResult r = theta(symfunc::g_expand(lambda), n);
  if (!r.exact) throw std::logic_error("Theta(P_" + lambda.to_string() + ") is not polynomial in t: " + r.diagnostic);
  std::lock_guard lock(mutex);
  return memo.try_emplace({lambda, n}, std::move(r.op)).first->second;
}

PolyOperator theta_symmetric(const symfunc::SymPoly& f, int n) {
  const std::size_t dim = std::size_t{1} << n;
  PolyOperator sum(dim, dim);
  for (const auto& [mu, c] : symfunc::expand_in_hl_basis(f, n)) {
    sum += theta_P(mu, n).scaled(c.to_multipoly(standard_env(n)));
  }
  return sum;
}

}  // namespace hlpos::sixvertex
