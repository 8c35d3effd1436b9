#include "hlpos/symfunc/pieri.hpp"

#include "hlpos/combinat/partition.hpp"
#include "hlpos/symfunc/hall_littlewood.hpp"

#include <algorithm>
#include <stdexcept>

namespace hlpos::symfunc {

using exactalg::Rational;

namespace {

UPoly one_minus_t_pow(int k) {
  if (k < 0) throw std::logic_error("negative exponent in a Pieri factor");
  return UPoly::one_minus_t_power(static_cast<unsigned>(k));
}

// Column-indexed conjugates, 1-based with index 0 filled by `zero_value`.
struct Columns {
  combinat::Partition lc, mc;
  int lam(int i) const { return i == 0 ? mc[0] : lc[static_cast<std::size_t>(i - 1)]; }
  int mu(int i) const { return i == 0 ? mc[0] : mc[static_cast<std::size_t>(i - 1)]; }
};

// Column factor shared by the ratio and head forms.
RatFuncT ratio_factor(const Columns& c, int i) {
  if (c.mu(i) != c.lam(i) + 1) return RatFuncT(Rational(1));
  const UPoly top = one_minus_t_pow(c.mu(i) - c.lam(i + 1));
  if (c.mu(i - 1) == c.lam(i - 1)) return RatFuncT(top);
  if (c.mu(i - 1) == c.lam(i - 1) + 1) return RatFuncT(top, one_minus_t_pow(c.mu(i - 1) - c.lam(i)));
  return RatFuncT();
}

}  // namespace

UPoly pieri_phi(const Partition& lambda, const Partition& mu) {
  if (!combinat::is_horizontal_strip(lambda, mu)) return UPoly();
  const Columns c{lambda.conjugate(), mu.conjugate()};
  UPoly phi(Rational(1));
  for (int i = 1; i <= mu[0]; ++i) {
    if (c.mu(i) == c.lam(i) + 1 && c.mu(i + 1) == c.lam(i + 1)) phi *= one_minus_t_pow(c.mu(i) - c.lam(i + 1));
  }
  return phi;
}

RatFuncT pieri_phi_ratio_form(const Partition& lambda, const Partition& mu) {
  if (!combinat::is_horizontal_strip(lambda, mu)) return RatFuncT();
  const Columns c{lambda.conjugate(), mu.conjugate()};
  RatFuncT phi(Rational(1));
  for (int i = 1; i <= mu[0]; ++i) phi *= ratio_factor(c, i);
  return phi;
}

RatFuncT pieri_phi_head_form(const Partition& lambda, const Partition& mu) {
  if (!combinat::is_horizontal_strip(lambda, mu)) return RatFuncT();
  const Columns c{lambda.conjugate(), mu.conjugate()};
  RatFuncT phi = mu[0] > lambda[0] ? RatFuncT(one_minus_t_pow(1)) : RatFuncT(Rational(1));
  for (int i = 1; i <= lambda[0]; ++i) phi *= ratio_factor(c, i);
  return phi;
}

RatFuncT pieri_psi_prime(const Partition& lambda, const Partition& mu) {
  if (!combinat::is_vertical_strip(lambda, mu)) return RatFuncT();
  const auto lc = lambda.conjugate();
  const auto mc = mu.conjugate();
  auto poch = [](int k) {
    if (k < 0) throw std::logic_error("negative Pochhammer length");
    return UPoly::t_pochhammer(static_cast<unsigned>(k));
  };
  RatFuncT psi(Rational(1));
  for (std::size_t i = 0; i < static_cast<std::size_t>(lambda[0]); ++i) {
    psi *= RatFuncT(poch(mc[i] - mc[i + 1]), poch(mc[i] - lc[i]) * poch(lc[i] - mc[i + 1]));
  }
  return psi;
}

std::map<Partition, UPoly> expand_in_hl_basis(const SymPoly& f, int n) {
  std::map<Partition, UPoly> out;
  auto env = exactalg::standard_env(n);
  MultiPoly rest = f;
  while (!rest.is_zero()) {
    std::vector<unsigned> best;
    for (const auto& term : rest.terms()) {
      auto e = term.mono.exponents(static_cast<std::size_t>(n) + 1);
      e.erase(e.begin());
      if (best.empty() || e > best) best = e;
    }
    std::vector<Rational> coeffs;
    for (const auto& term : rest.terms()) {
      auto e = term.mono.exponents(static_cast<std::size_t>(n) + 1);
      if (!std::equal(best.begin(), best.end(), e.begin() + 1)) continue;
      if (coeffs.size() <= e[0]) coeffs.resize(e[0] + 1, Rational(0));
      coeffs[e[0]] += term.coeff;
    }
    std::vector<int> parts(best.begin(), best.end());
    if (!std::is_sorted(parts.rbegin(), parts.rend())) {
      throw std::invalid_argument("leading exponent is not a partition; input is not symmetric");
    }
    const Partition mu(parts);
    const UPoly c(coeffs);
    rest -= c.to_multipoly(env) * hl_polynomial(mu, n);
    out.emplace(mu, c);
  }
  return out;
}

}  // namespace hlpos::symfunc
