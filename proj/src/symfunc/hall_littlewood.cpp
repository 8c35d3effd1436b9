#include "hlpos/symfunc/hall_littlewood.hpp"

#include "hlpos/combinat/gt_array.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace hlpos::symfunc {

using exactalg::Rational;
using exactalg::standard_env;

UPoly v_lambda(const Partition& lambda, int n) {
  if (lambda.length() > n) throw std::invalid_argument("partition longer than the number of variables");
  const UPoly one_minus_t = UPoly::one_minus_t_power(1);
  auto v_m = [&](int m) {
    // (t;t)_m / (1-t)^m
    UPoly p(Rational(1));
    for (int i = 1; i <= m; ++i) p *= UPoly::one_minus_t_power(static_cast<unsigned>(i)).divmod(one_minus_t).first;
    return p;
  };
  UPoly v = v_m(n - lambda.length());
  for (int k = 1; k <= (lambda.empty() ? 0 : lambda[0]); ++k) v *= v_m(lambda.multiplicity(k));
  return v;
}

namespace {

MultiPoly symmetrization_seed(const Partition& lambda, int n) {
  MultiPoly seed = a_monomial(lambda.padded(static_cast<std::size_t>(n)), n);
  const MultiPoly t = t_var(n);
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) seed *= a_var(i, n) - t * a_var(j, n);
  }
  return seed;
}

std::vector<std::vector<std::size_t>> all_permutations(int n) {
  std::vector<std::size_t> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 1);
  std::vector<std::vector<std::size_t>> out;
  do {
    std::vector<std::size_t> full{0};  // t stays put
    full.insert(full.end(), p.begin(), p.end());
    out.push_back(std::move(full));
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

int sign_of(const std::vector<std::size_t>& perm) {
  int inv = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    for (std::size_t j = i + 1; j < perm.size(); ++j) inv += perm[i] > perm[j];
  }
  return inv % 2 ? -1 : 1;
}

SymPoly finish_symmetrization(MultiPoly numerator, const Partition& lambda, int n) {
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      auto q = numerator.divide_exact(a_var(i, n) - a_var(j, n));
      if (!q) throw std::logic_error("symmetrized numerator not divisible by the Vandermonde product");
      numerator = std::move(*q);
    }
  }
  auto q = numerator.divide_exact(v_lambda(lambda, n).to_multipoly(standard_env(n)));
  if (!q) throw std::logic_error("symmetrization not divisible by v_lambda(t)");
  return std::move(*q);
}

}  // namespace

SymPoly hl_symmetrization(const Partition& lambda, int n, Exec exec) {
  if (lambda.length() > n) throw std::invalid_argument("hl_symmetrization needs length(lambda) <= n");
  const MultiPoly seed = symmetrization_seed(lambda, n);
  const auto perms = all_permutations(n);
  // Pairwise tree reduction keeps the partial sums balanced across threads.
  std::vector<MultiPoly> parts(perms.size());
  exactalg::for_each_index(perms.size(), exec, [&](std::size_t k) {
    parts[k] = seed.permute_variables(perms[k]) * Rational(sign_of(perms[k]));
  });
  for (std::size_t stride = 1; stride < parts.size(); stride *= 2) {
    const std::size_t pairs = (parts.size() + 2 * stride - 1) / (2 * stride);
    exactalg::for_each_index(pairs, exec, [&](std::size_t p) {
      const std::size_t i = 2 * stride * p;
      if (i + stride < parts.size()) parts[i] += parts[i + stride];
    });
  }
  return finish_symmetrization(parts.empty() ? constant(0, n) : std::move(parts[0]), lambda, n);
}

namespace reference {

SymPoly hl_symmetrization(const Partition& lambda, int n) {
  if (lambda.length() > n) throw std::invalid_argument("hl_symmetrization needs length(lambda) <= n");
  const auto padded = lambda.padded(static_cast<std::size_t>(n));
  MultiPoly numerator = constant(0, n);
  const MultiPoly t = t_var(n);
  for (const auto& perm : all_permutations(n)) {
    // w(a_i) = a_{perm[i]}
    MultiPoly term = constant(sign_of(perm), n);
    for (int i = 1; i <= n; ++i) {
      for (int k = 0; k < padded[i - 1]; ++k) term *= a_var(static_cast<int>(perm[i]), n);
    }
    for (int i = 1; i <= n; ++i) {
      for (int j = i + 1; j <= n; ++j) {
        term *= a_var(static_cast<int>(perm[i]), n) - t * a_var(static_cast<int>(perm[j]), n);
      }
    }
    numerator += term;
  }
  return finish_symmetrization(std::move(numerator), lambda, n);
}

}  // namespace reference

UPoly tableau_weight(const combinat::Tableau& tableau) {
  UPoly w(Rational(1));
  const auto& rows = tableau.rows();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 1; j < rows[i].size(); ++j) {
      const int p = rows[i][j];
      const auto prev = tableau.column(j - 1);
      if (std::find(prev.begin(), prev.end(), p) != prev.end()) continue;
      const long smaller = std::count_if(prev.begin(), prev.end(), [p](int x) { return x < p; });
      // 1-based row index is i+1
      const long exponent = smaller - static_cast<long>(i + 1) + 1;
      if (exponent < 0) throw std::logic_error("negative exponent in tableau weight");
      w *= UPoly(Rational(1)) - UPoly::t_power(static_cast<unsigned>(exponent));
    }
  }
  return w;
}

SymPoly hl_tableau_sum(const Partition& lambda, int n) {
  auto env = standard_env(n);
  MultiPoly sum(env);
  for (const auto& g : combinat::enumerate_gt(lambda, n)) {
    const auto t = combinat::gt_to_tableau(g);
    sum += tableau_weight(t).to_multipoly(env) * a_monomial(t.content(n), n);
  }
  return sum;
}

namespace {

template <class Key>
class PolyCache {
 public:
  template <class Make>
  const SymPoly& get(const Key& key, Make make) {
    {
      std::lock_guard lock(mutex_);
      auto it = map_.find(key);
      if (it != map_.end()) return it->second;
    }
    SymPoly value = make();
    std::lock_guard lock(mutex_);
    return map_.try_emplace(key, std::move(value)).first->second;
  }

 private:
  std::mutex mutex_;
  std::map<Key, SymPoly> map_;  // node-based: references stay valid
};

}  // namespace

const SymPoly& hl_polynomial(const Partition& lambda, int n) {
  static PolyCache<std::pair<Partition, int>> cache;
  return cache.get({lambda, n}, [&] {
    return lambda.length() > n ? constant(0, n) : hl_tableau_sum(lambda, n);
  });
}

const SymPoly& g_poly(int r, int n) {
  static PolyCache<std::pair<int, int>> cache;
  return cache.get({r, n}, [&] {
    if (r < 0) return constant(0, n);
    if (r == 0) return constant(1, n);
    return (constant(1, n) - t_var(n)) * hl_polynomial(Partition({r}), n);
  });
}

exactalg::TruncSeries g_generating_series(int n, std::size_t order) {
  auto env = standard_env(n);
  const MultiPoly one = constant(1, n);
  auto product = exactalg::TruncSeries::constant(env, order, one);
  for (int i = 1; i <= n; ++i) {
    auto num = exactalg::TruncSeries::linear(env, order, one, -(t_var(n) * a_var(i, n)));
    auto den = exactalg::TruncSeries::linear(env, order, one, -a_var(i, n));
    product = product * num * den.inverse();
  }
  return product;
}

}  // namespace hlpos::symfunc
