#include "hlpos/extvertex/model.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace hlpos::extvertex {

using exactalg::Rational;
using exactalg::standard_env;

std::size_t wstate_count(int n) {
  if (n < 1 || n > 12) throw std::invalid_argument("extended transfer operators need 1 <= n <= 12");
  std::size_t d = 1;
  for (int i = 0; i < n; ++i) d *= 3;
  return d;
}

int wstate_digit(WState w, int i) {
  for (int k = 1; k < i; ++k) w /= 3;
  return static_cast<int>(w % 3);
}

int wstate_grade(WState w, int n) {
  int k = 0;
  for (int i = 0; i < n; ++i, w /= 3) k += w % 3 == 0;
  return k;
}

WState wstate_from_string(const std::string& s) {
  WState w = 0;
  for (auto it = s.rbegin(); it != s.rend(); ++it) {
    if (*it < '0' || *it > '2') throw std::invalid_argument("W states are words over 0, 1, 2");
    w = 3 * w + static_cast<WState>(*it - '0');
  }
  return w;
}

std::string wstate_to_string(WState w, int n) {
  std::string s;
  for (int i = 0; i < n; ++i, w /= 3) s += static_cast<char>('0' + w % 3);
  return s;
}

namespace {

MultiPoly t_power(const MultiPoly& t, int k) {
  MultiPoly p(t.env(), Rational(1));
  for (int i = 0; i < k; ++i) p *= t;
  return p;
}

}  // namespace

std::vector<ExtOutcome> r_ext(int color, PairState p, const MultiPoly& a, const MultiPoly& t) {
  if (p.x < 0 || p.y < 0) throw std::invalid_argument("pair components must be nonnegative");
  const MultiPoly one(t.env(), Rational(1));
  const MultiPoly ty = t_power(t, p.y);
  std::vector<ExtOutcome> out;
  auto push = [&](int top, PairState right, MultiPoly w) {
    if (right.x < 0 || right.y < 0 || w.is_zero()) return;
    out.push_back({top, right, std::move(w)});
  };
  switch (color) {
    case 0:
      push(0, p, a);
      push(1, {p.x - 1, p.y}, ty - t_power(t, p.x + p.y));
      push(2, {p.x, p.y - 1}, one - ty);
      break;
    case 1:
      push(0, {p.x + 1, p.y}, a);
      push(1, p, ty);
      push(2, {p.x + 1, p.y - 1}, one - ty);
      break;
    case 2:
      push(0, {p.x, p.y + 1}, a);
      push(2, p, one);
      break;
    default:
      throw std::invalid_argument("extended colors are 0, 1 and 2");
  }
  return out;
}

namespace {

int count_color(WState w, int n, int color) {
  int c = 0;
  for (int i = 0; i < n; ++i, w /= 3) c += static_cast<int>(w % 3) == color;
  return c;
}

void check_conservation(WState in, WState out, PairState end, int n) {
  if (end.x != count_color(in, n, 1) - count_color(out, n, 1) ||
      end.y != count_color(in, n, 2) - count_color(out, n, 2)) {
    throw std::logic_error("extended vertex path violates color conservation: " + wstate_to_string(in, n) +
                           " -> " + wstate_to_string(out, n));
  }
}

}  // namespace

ExtTransfer::ExtTransfer(int n, Exec exec) : n_(n) {
  const std::size_t dim = wstate_count(n);
  auto env = standard_env(n);
  const MultiPoly t = MultiPoly::variable(env, 0);
  std::vector<MultiPoly> a;
  for (int i = 1; i <= n; ++i) a.push_back(MultiPoly::variable(env, static_cast<std::size_t>(i)));
  std::vector<WState> pow3(static_cast<std::size_t>(n), 1);
  for (int i = 1; i < n; ++i) pow3[static_cast<std::size_t>(i)] = 3 * pow3[static_cast<std::size_t>(i) - 1];

  std::vector<PolyOperator::Column> cols(dim);
  exactalg::for_each_index(dim, exec, [&](std::size_t v) {
    const auto in = static_cast<WState>(v);
    // Partial paths merged by (output prefix, current pair).
    std::map<std::pair<WState, PairState>, MultiPoly> paths{{{0, {0, 0}}, MultiPoly(env, Rational(1))}};
    for (int i = 1; i <= n; ++i) {
      const int bottom = wstate_digit(in, i);
      std::map<std::pair<WState, PairState>, MultiPoly> next;
      for (const auto& [key, w] : paths) {
        for (auto& o : r_ext(bottom, key.second, a[static_cast<std::size_t>(i) - 1], t)) {
          if (o.right.x > n || o.right.y > n) throw std::logic_error("pair state exceeds n");
          const WState out = key.first + static_cast<WState>(o.top) * pow3[static_cast<std::size_t>(i) - 1];
          next[{out, o.right}] += w * o.weight;
        }
      }
      std::erase_if(next, [](const auto& e) { return e.second.is_zero(); });
      paths = std::move(next);
    }
    for (auto& [key, w] : paths) {
      check_conservation(in, key.first, key.second, n);
      cols[v].emplace_back(key.first, std::move(w));
    }
  });
  full_ = PolyOperator(dim, dim);
  for (std::size_t v = 0; v < dim; ++v) full_.set_column(v, std::move(cols[v]));
}

GradedOperator ExtTransfer::block(int k1, int k2) const {
  GradedOperator g{k1, k2, PolyOperator(full_.rows(), full_.cols())};
  if (k1 < 0 || k1 > k2 || k2 > n_) return g;
  for (std::size_t v = 0; v < full_.cols(); ++v) {
    if (wstate_grade(static_cast<WState>(v), n_) != k1) continue;
    PolyOperator::Column col;
    for (const auto& [row, c] : full_.column(v)) {
      if (wstate_grade(row, n_) == k2) col.emplace_back(row, c);
    }
    g.op.set_column(v, std::move(col));
  }
  return g;
}

const ExtTransfer& transfer_H(int n) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<ExtTransfer>> memo;
  std::lock_guard lock(mutex);
  auto& slot = memo[n];
  if (!slot) slot = std::make_unique<ExtTransfer>(n);
  return *slot;
}

namespace reference {

PolyOperator transfer_H(int n) {
  const std::size_t dim = wstate_count(n);
  auto env = standard_env(n);
  const MultiPoly t = MultiPoly::variable(env, 0);
  PolyOperator op(dim, dim);
  for (std::size_t v = 0; v < dim; ++v) {
    PolyOperator::Column col;
    for (std::size_t u = 0; u < dim; ++u) {
      // Depth-first over the pair entering each column.
      MultiPoly total(env);
      auto walk = [&](auto&& self, int i, PairState p, MultiPoly w) -> void {
        if (i > n) {
          total += w;
          return;
        }
        const MultiPoly ai = MultiPoly::variable(env, static_cast<std::size_t>(i));
        for (const auto& o : r_ext(wstate_digit(static_cast<WState>(v), i), p, ai, t)) {
          if (o.top == wstate_digit(static_cast<WState>(u), i)) self(self, i + 1, o.right, w * o.weight);
        }
      };
      walk(walk, 1, {0, 0}, MultiPoly(env, Rational(1)));
      if (!total.is_zero()) col.emplace_back(static_cast<PolyOperator::Index>(u), std::move(total));
    }
    op.set_column(v, std::move(col));
  }
  return op;
}

}  // namespace reference
}  // namespace hlpos::extvertex
