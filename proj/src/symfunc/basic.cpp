#include "hlpos/symfunc/basic.hpp"

#include "hlpos/combinat/gt_array.hpp"
#include "hlpos/combinat/tableau.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace hlpos::symfunc {

using exactalg::Monomial;
using exactalg::Rational;
using exactalg::standard_env;

MultiPoly a_var(int i, int n) {
  if (i < 1 || i > n) throw std::invalid_argument("a-variable index out of range");
  return MultiPoly::variable(standard_env(n), static_cast<std::size_t>(i));
}

MultiPoly t_var(int n) { return MultiPoly::variable(standard_env(n), 0); }

MultiPoly constant(const Rational& c, int n) { return MultiPoly(standard_env(n), c); }

MultiPoly a_monomial(const std::vector<int>& exponents, int n) {
  if (static_cast<int>(exponents.size()) > n) throw std::invalid_argument("exponent vector longer than n");
  std::vector<unsigned> e(static_cast<std::size_t>(n) + 1, 0);
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] < 0) throw std::invalid_argument("negative exponent");
    e[i + 1] = static_cast<unsigned>(exponents[i]);
  }
  return MultiPoly::monomial(standard_env(n), Monomial::from_exponents(e), Rational(1));
}

namespace {

// Sum of a^e over index tuples 1 <= i_1 <= ... <= i_r <= n (strict when
// `strict`), accumulated as exponent vectors.
SymPoly tuple_sum(int r, int n, bool strict) {
  auto env = standard_env(n);
  if (r < 0) return MultiPoly(env);
  std::vector<exactalg::Term> terms;
  std::vector<unsigned> e(static_cast<std::size_t>(n) + 1, 0);
  std::function<void(int, int)> rec = [&](int left, int from) {
    if (left == 0) {
      terms.push_back({Monomial::from_exponents(e), Rational(1)});
      return;
    }
    for (int i = from; i <= n; ++i) {
      ++e[i];
      rec(left - 1, strict ? i + 1 : i);
      --e[i];
    }
  };
  rec(r, 1);
  return MultiPoly(env, std::move(terms));
}

}  // namespace

SymPoly complete_h(int r, int n) { return tuple_sum(r, n, false); }
SymPoly elementary_e(int r, int n) { return tuple_sum(r, n, true); }

SymPoly monomial_m(const Partition& lambda, int n) {
  auto env = standard_env(n);
  if (lambda.length() > n) return MultiPoly(env);
  std::vector<int> e = lambda.padded(static_cast<std::size_t>(n));
  std::sort(e.begin(), e.end());
  std::vector<exactalg::Term> terms;
  do {
    std::vector<unsigned> u(static_cast<std::size_t>(n) + 1, 0);
    for (int i = 0; i < n; ++i) u[i + 1] = static_cast<unsigned>(e[i]);
    terms.push_back({Monomial::from_exponents(u), Rational(1)});
  } while (std::next_permutation(e.begin(), e.end()));
  return MultiPoly(env, std::move(terms));
}

SymPoly schur_jacobi_trudi(const Partition& lambda, int n) {
  const int l = lambda.length();
  std::vector<std::vector<MultiPoly>> h(l, std::vector<MultiPoly>(l));
  for (int i = 0; i < l; ++i) {
    for (int j = 0; j < l; ++j) h[i][j] = complete_h(lambda[i] - i + j, n);
  }
  std::vector<int> perm(l);
  std::iota(perm.begin(), perm.end(), 0);
  MultiPoly det = constant(l == 0 ? 1 : 0, n);
  if (l == 0) return det;
  do {
    int inversions = 0;
    for (int i = 0; i < l; ++i) {
      for (int j = i + 1; j < l; ++j) inversions += perm[i] > perm[j];
    }
    MultiPoly term = constant(inversions % 2 ? -1 : 1, n);
    for (int i = 0; i < l && !term.is_zero(); ++i) term *= h[i][perm[i]];
    det += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

SymPoly schur_tableau_sum(const Partition& lambda, int n) {
  MultiPoly sum = constant(0, n);
  for (const auto& g : combinat::enumerate_gt(lambda, n)) {
    sum += a_monomial(combinat::gt_to_tableau(g).content(n), n);
  }
  return sum;
}

bool is_symmetric(const MultiPoly& p, int n) {
  std::vector<std::size_t> perm(static_cast<std::size_t>(n) + 1);
  for (int i = 1; i < n; ++i) {
    std::iota(perm.begin(), perm.end(), 0);
    std::swap(perm[i], perm[i + 1]);
    if (!(p.permute_variables(perm) == p)) return false;
  }
  return true;
}

}  // namespace hlpos::symfunc
