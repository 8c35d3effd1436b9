#pragma once

#include "hlpos/exactalg/upoly.hpp"
#include "hlpos/symfunc/basic.hpp"

#include <map>
#include <string>
#include <vector>

namespace hlpos::symfunc {

using exactalg::RatFuncT;

// Multiset of generator indices {i_1 >= i_2 >= ... >= i_k}, standing for the
// product g_{i_1} ... g_{i_k}. The empty multiset is the constant 1.
using GMonomial = std::vector<int>;

// Linear combination of g-monomials with coefficients in Q(t).
class GExpansion {
 public:
  GExpansion() = default;

  static GExpansion one();
  static GExpansion generator(int r);

  const std::map<GMonomial, RatFuncT>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  // Total degree of every monomial when homogeneous, otherwise -1.
  int degree() const;

  GExpansion& add(const GMonomial& m, const RatFuncT& c);
  GExpansion& operator+=(const GExpansion& rhs);
  GExpansion& operator-=(const GExpansion& rhs);
  GExpansion& operator*=(const RatFuncT& c);
  // Multiplies every monomial by g_r.
  GExpansion times_generator(int r) const;

  friend GExpansion operator*(const GExpansion& lhs, const GExpansion& rhs);
  bool operator==(const GExpansion&) const = default;
  std::string pretty() const;

 private:
  std::map<GMonomial, RatFuncT> terms_;
};

// P_lambda in the generators g_1, g_2, ...: the last row of lambda (length r)
// is peeled off, giving chi, and
//   P_lambda = (g_r P_chi - sum_{nu != lambda} phi_{nu/chi} P_nu) / phi_{lambda/chi}
// with nu over the other horizontal strips of size r above chi. Memoized;
// safe to call concurrently.
const GExpansion& g_expand(const Partition& lambda);

// e_k in the generators, from sum_{r=0..k} (-1)^r e_r g_{k-r} = (-1)^k t^k e_k.
GExpansion e_in_generators(int k);
// g_k rewritten in g_1..g_n using e_r = 0 for r > n; valid only in n
// variables. For k <= n this is g_k itself.
GExpansion g_in_low_generators(int k, int n);

// Substitutes g_k -> g_poly(k, n). Coefficients are brought to a common
// denominator first, so the final division must be exact; throws
// std::logic_error otherwise.
SymPoly evaluate_expansion(const GExpansion& e, int n);

}  // namespace hlpos::symfunc
