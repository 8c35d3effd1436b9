#include "hlpos/plactic/subset.hpp"

#include "hlpos/combinat/gt_array.hpp"
#include "hlpos/plactic/insertion.hpp"
#include "hlpos/symfunc/basic.hpp"

#include <bit>
#include <map>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace hlpos::plactic {

using exactalg::Rational;
using exactalg::standard_env;

SubsetState subset_action(int i, SubsetState s, int n) {
  if (i < 1 || i > n) throw std::invalid_argument("letter outside 1..n");
  const SubsetState bit = 1u << (i - 1);
  if (s & bit) return s;
  const SubsetState above = s & ~((bit << 1) - 1);
  if (above == 0) return s | bit;
  return (s | bit) & ~(above & (~above + 1));
}

SubsetState word_action(const Word& w, SubsetState s, int n) {
  for (auto it = w.rbegin(); it != w.rend(); ++it) s = subset_action(*it, s, n);
  return s;
}

Word column_word(SubsetState s, int n) {
  Word w;
  for (int i = n; i >= 1; --i) {
    if (s & (1u << (i - 1))) w.push_back(i);
  }
  return w;
}

std::string subset_to_string(SubsetState s, int n) {
  std::string out = "{";
  for (int i = 1; i <= n; ++i) {
    if (!(s & (1u << (i - 1)))) continue;
    if (out.size() > 1) out += ",";
    out += std::to_string(i);
  }
  return out + "}";
}

namespace {

std::size_t state_count(int n) {
  if (n < 1 || n > 16) throw std::invalid_argument("subset operators need 1 <= n <= 16");
  return std::size_t{1} << n;
}

}  // namespace

SubsetOperator h_r_operator(int r, int n) {
  const std::size_t dim = state_count(n);
  if (r < 0) return SubsetOperator(dim, dim);
  SubsetOperator op(dim, dim);
  for (std::size_t s = 0; s < dim; ++s) {
    SubsetOperator::Column col;
    Word w;
    std::function<void(int, int)> rec = [&](int left, int from) {
      if (left == 0) {
        std::vector<int> content(static_cast<std::size_t>(n), 0);
        for (int x : w) ++content[x - 1];
        col.emplace_back(word_action(w, static_cast<SubsetState>(s), n), symfunc::a_monomial(content, n));
        return;
      }
      for (int i = from; i <= n; ++i) {
        w.push_back(i);
        rec(left - 1, i);
        w.pop_back();
      }
    };
    rec(r, 1);
    op.set_column(s, std::move(col));
  }
  return op;
}

SubsetOperator plactic_schur_operator(const Partition& lambda, int n, Exec exec) {
  const std::size_t dim = state_count(n);
  const int l = lambda.length();
  const auto identity = SubsetOperator::identity(dim, MultiPoly(standard_env(n), Rational(1)));
  if (l == 0) return identity;
  std::map<int, SubsetOperator> h;
  for (int i = 0; i < l; ++i) {
    for (int j = 0; j < l; ++j) {
      const int r = lambda[i] - i + j;
      if (!h.count(r)) h.emplace(r, h_r_operator(r, n));
    }
  }
  std::vector<int> perm(l);
  std::iota(perm.begin(), perm.end(), 0);
  SubsetOperator det(dim, dim);
  do {
    int inversions = 0;
    for (int i = 0; i < l; ++i) {
      for (int j = i + 1; j < l; ++j) inversions += perm[i] > perm[j];
    }
    SubsetOperator term = identity;
    for (int i = 0; i < l && !term.is_zero(); ++i) term = exactalg::compose(term, h.at(lambda[i] - i + perm[i]), exec);
    if (inversions % 2) det -= term;
    else det += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

SubsetOperator plactic_schur_tableau_operator(const Partition& lambda, int n, Exec exec) {
  const std::size_t dim = state_count(n);
  SubsetOperator op(dim, dim);
  std::vector<combinat::Word> words;
  std::vector<MultiPoly> weights;
  for (const auto& g : combinat::enumerate_gt(lambda, n)) {
    const auto t = combinat::gt_to_tableau(g);
    words.push_back(combinat::reading_word(t));
    weights.push_back(symfunc::a_monomial(t.content(n), n));
  }
  std::vector<SubsetOperator::Column> cols(dim);
  exactalg::for_each_index(dim, exec, [&](std::size_t s) {
    const Word tail = column_word(static_cast<SubsetState>(s), n);
    for (std::size_t k = 0; k < words.size(); ++k) {
      Word w = words[k];
      w.insert(w.end(), tail.begin(), tail.end());
      cols[s].emplace_back(first_column_set(insertion_tableau(w)), weights[k]);
    }
  });
  for (std::size_t s = 0; s < dim; ++s) op.set_column(s, std::move(cols[s]));
  return op;
}

SubsetOperator::Column plactic_schur_action(const Partition& lambda, SubsetState s, int n) {
  if (s >= state_count(n)) throw std::invalid_argument("subset outside 1..n");
  return plactic_schur_operator(lambda, n).column(s);
}

}  // namespace hlpos::plactic
