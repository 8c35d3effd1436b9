#include "hlpos/symfunc/gexpansion.hpp"

#include "hlpos/symfunc/hall_littlewood.hpp"
#include "hlpos/symfunc/pieri.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace hlpos::symfunc {

using exactalg::Rational;
using exactalg::UPoly;

GExpansion GExpansion::one() {
  GExpansion e;
  e.terms_.emplace(GMonomial{}, RatFuncT(Rational(1)));
  return e;
}

GExpansion GExpansion::generator(int r) {
  if (r < 1) throw std::invalid_argument("generator index must be positive");
  GExpansion e;
  e.terms_.emplace(GMonomial{r}, RatFuncT(Rational(1)));
  return e;
}

int GExpansion::degree() const {
  int d = -2;
  for (const auto& [m, c] : terms_) {
    const int k = std::accumulate(m.begin(), m.end(), 0);
    if (d == -2) d = k;
    else if (d != k) return -1;
  }
  return d == -2 ? 0 : d;
}

GExpansion& GExpansion::add(const GMonomial& m, const RatFuncT& c) {
  if (c.is_zero()) return *this;
  GMonomial key = m;
  std::sort(key.begin(), key.end(), std::greater<>());
  auto [it, inserted] = terms_.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
  return *this;
}

GExpansion& GExpansion::operator+=(const GExpansion& rhs) {
  for (const auto& [m, c] : rhs.terms_) add(m, c);
  return *this;
}

GExpansion& GExpansion::operator-=(const GExpansion& rhs) {
  for (const auto& [m, c] : rhs.terms_) add(m, -c);
  return *this;
}

GExpansion& GExpansion::operator*=(const RatFuncT& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

GExpansion GExpansion::times_generator(int r) const {
  GExpansion out;
  for (const auto& [m, c] : terms_) {
    GMonomial k = m;
    k.push_back(r);
    out.add(k, c);
  }
  return out;
}

GExpansion operator*(const GExpansion& lhs, const GExpansion& rhs) {
  GExpansion out;
  for (const auto& [m1, c1] : lhs.terms_) {
    for (const auto& [m2, c2] : rhs.terms_) {
      GMonomial m = m1;
      m.insert(m.end(), m2.begin(), m2.end());
      out.add(m, c1 * c2);
    }
  }
  return out;
}

std::string GExpansion::pretty() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [m, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += "(" + c.pretty() + ")";
    for (int k : m) s += "*g" + std::to_string(k);
  }
  return s;
}

const GExpansion& g_expand(const Partition& lambda) {
  static std::mutex mutex;
  static std::map<Partition, GExpansion> memo;
  {
    std::lock_guard lock(mutex);
    auto it = memo.find(lambda);
    if (it != memo.end()) return it->second;
  }
  GExpansion result;
  if (lambda.empty()) {
    result = GExpansion::one();
  } else {
    const int r = lambda.parts().back();
    std::vector<int> head(lambda.parts().begin(), lambda.parts().end() - 1);
    const Partition chi(head);
    result = g_expand(chi).times_generator(r);
    for (const auto& nu : combinat::horizontal_strips_above(chi, r)) {
      if (nu == lambda) continue;
      GExpansion term = g_expand(nu);
      term *= RatFuncT(pieri_phi(chi, nu));
      result -= term;
    }
    result *= RatFuncT(UPoly(Rational(1)), pieri_phi(chi, lambda));
  }
  std::lock_guard lock(mutex);
  return memo.try_emplace(lambda, std::move(result)).first->second;
}

GExpansion e_in_generators(int k) {
  if (k < 0) return GExpansion();
  if (k == 0) return GExpansion::one();
  GExpansion sum;
  for (int r = 0; r < k; ++r) {
    GExpansion term = e_in_generators(r).times_generator(k - r);
    term *= RatFuncT(Rational(r % 2 ? -1 : 1));
    sum += term;
  }
  const Rational sign(k % 2 ? 1 : -1);  // -1 / (-1)^k
  sum *= RatFuncT(UPoly(sign), UPoly::one_minus_t_power(static_cast<unsigned>(k)));
  return sum;
}

GExpansion g_in_low_generators(int k, int n) {
  if (k < 0) return GExpansion();
  if (k == 0) return GExpansion::one();
  if (k <= n) return GExpansion::generator(k);
  GExpansion sum;
  for (int r = 1; r <= n; ++r) {
    GExpansion term = e_in_generators(r) * g_in_low_generators(k - r, n);
    term *= RatFuncT(Rational(r % 2 ? 1 : -1));
    sum += term;
  }
  return sum;
}

SymPoly evaluate_expansion(const GExpansion& e, int n) {
  auto env = exactalg::standard_env(n);
  UPoly common(Rational(1));
  for (const auto& [m, c] : e.terms()) common = exactalg::lcm(common, c.den());
  MultiPoly sum(env);
  for (const auto& [m, c] : e.terms()) {
    const UPoly scale = common.divmod(c.den()).first;
    MultiPoly term = (c.num() * scale).to_multipoly(env);
    for (int k : m) term *= g_poly(k, n);
    sum += term;
  }
  auto q = sum.divide_exact(common.to_multipoly(env));
  if (!q) throw std::logic_error("g-expansion does not evaluate to a polynomial");
  return std::move(*q);
}

}  // namespace hlpos::symfunc
