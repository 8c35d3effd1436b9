#include "hlpos/extvertex/model.hpp"
#include "hlpos/extvertex/pi.hpp"
#include "hlpos/sixvertex/theta.hpp"
#include "hlpos/sixvertex/transfer.hpp"
#include "hlpos/symfunc/basic.hpp"

#include <doctest.h>

#include <random>
#include <stdexcept>

using namespace hlpos::extvertex;
using hlpos::combinat::Partition;
using hlpos::combinat::partitions_up_to;
using hlpos::exactalg::Rational;
using hlpos::exactalg::standard_env;

namespace {

MultiPoly one(int n) { return MultiPoly(standard_env(n), Rational(1)); }
MultiPoly a(int i, int n) { return MultiPoly::variable(standard_env(n), static_cast<std::size_t>(i)); }
MultiPoly tv(int n) { return MultiPoly::variable(standard_env(n), 0); }

}  // namespace

TEST_CASE("WState encoding") {
  for (int n = 1; n <= 4; ++n) {
    for (WState w = 0; w < wstate_count(n); ++w) {
      const auto s = wstate_to_string(w, n);
      CHECK(wstate_from_string(s) == w);
      int zeros = 0;
      for (int i = 1; i <= n; ++i) {
        CHECK(s[static_cast<std::size_t>(i) - 1] - '0' == wstate_digit(w, i));
        zeros += s[static_cast<std::size_t>(i) - 1] == '0';
      }
      CHECK(wstate_grade(w, n) == zeros);
    }
  }
  CHECK_THROWS_AS(wstate_from_string("013"), std::invalid_argument);
}

TEST_CASE("R_ext outcomes") {
  const int n = 1;
  const auto two = r_ext(2, {3, 2}, a(1, n), tv(n));
  REQUIRE(two.size() == 2);
  CHECK(two[0].top == 0);
  CHECK(two[0].right == PairState{3, 3});
  CHECK(two[0].weight == a(1, n));
  CHECK(two[1].top == 2);
  CHECK(two[1].right == PairState{3, 2});
  CHECK(two[1].weight == one(n));

  const auto fresh = r_ext(1, {0, 0}, a(1, n), tv(n));
  REQUIRE(fresh.size() == 2);
  CHECK(fresh[0].top == 0);
  CHECK(fresh[0].right == PairState{1, 0});
  CHECK(fresh[1].top == 1);
  CHECK(fresh[1].weight == one(n));

  CHECK(r_ext(0, {0, 0}, a(1, n), tv(n)).size() == 1);
  CHECK_THROWS_AS(r_ext(3, {0, 0}, a(1, n), tv(n)), std::invalid_argument);
  CHECK_THROWS_AS(r_ext(0, {-1, 0}, a(1, n), tv(n)), std::invalid_argument);

  // weights at t = 1/2, a = 1/3 are nonnegative, and the color changes
  // respect the pair bookkeeping
  for (int color = 0; color <= 2; ++color) {
    for (int x = 0; x <= 3; ++x) {
      for (int y = 0; y <= 3; ++y) {
        for (const auto& o : r_ext(color, {x, y}, a(1, n), tv(n))) {
          auto w = o.weight.eval_t(Rational(1, 2)).substitute(1, Rational(1, 3));
          CHECK(w.constant_term() >= 0);
          const int dx = (color == 1) - (o.top == 1);
          const int dy = (color == 2) - (o.top == 2);
          CHECK(o.right.x == x + dx);
          CHECK(o.right.y == y + dy);
        }
      }
    }
  }
}

TEST_CASE("H: structure") {
  for (int n = 1; n <= 4; ++n) {
    const auto& h = transfer_H(n);
    CHECK(h.full() == reference::transfer_H(n));
    CHECK(h.full() == ExtTransfer(n, hlpos::exactalg::Exec::serial).full());
    // H is block upper triangular in the grading
    for (std::size_t v = 0; v < h.full().cols(); ++v) {
      for (const auto& [row, c] : h.full().column(v)) CHECK(wstate_grade(row, n) >= wstate_grade(static_cast<WState>(v), n));
    }
    // H_{0,0} is the identity on <1,2>^n, H_{k1,k2} = 0 for k1 > k2
    const auto h00 = h.block(0, 0).op;
    for (std::size_t v = 0; v < h00.cols(); ++v) {
      if (wstate_grade(static_cast<WState>(v), n) != 0) {
        CHECK(h00.column(v).empty());
      } else {
        REQUIRE(h00.column(v).size() == 1);
        CHECK(h00.column(v)[0].first == v);
        CHECK(h00.column(v)[0].second == one(n));
      }
    }
    for (int k1 = 0; k1 <= n; ++k1) {
      for (int k2 = 0; k2 < k1; ++k2) CHECK(h.block(k1, k2).op.is_zero());
    }
    PolyOperator sum(h.full().rows(), h.full().cols());
    for (int k1 = 0; k1 <= n; ++k1) {
      for (int k2 = k1; k2 <= n; ++k2) sum += h.block(k1, k2).op;
    }
    CHECK(sum == h.full());
    // positivity at t samples
    for (const Rational& t0 : {Rational(0), Rational(1, 4), Rational(1, 2), Rational(3, 4)}) {
      for (const auto& col : h.full().columns()) {
        for (const auto& [row, c] : col) CHECK(c.eval_t(t0).has_nonnegative_coefficients());
      }
    }
  }
  const auto h01 = transfer_H(1).block(0, 1).op;
  CHECK(h01.entry(wstate_from_string("0"), wstate_from_string("1")) == a(1, 1));
  CHECK(h01.entry(wstate_from_string("0"), wstate_from_string("2")) == a(1, 1));
}

TEST_CASE("H_{k,k} on states with zeros") {
  // not the identity: with n = 2, H_{1,1}(10) = a2 10 + (1-t) a1 01
  const int n = 2;
  const auto h11 = transfer_H(n).block(1, 1).op;
  const WState v = wstate_from_string("10");
  CHECK(h11.entry(v, v) == a(2, n));
  CHECK(h11.entry(wstate_from_string("01"), v) == (one(n) - tv(n)) * a(1, n));
  CHECK(h11.column(v).size() == 2);
  CHECK(h11.column(wstate_from_string("01")).size() == 1);
  CHECK(h11.entry(wstate_from_string("01"), wstate_from_string("01")) == a(1, n));
}

TEST_CASE("Pi_lambda small cases") {
  for (int n = 1; n <= 3; ++n) {
    const std::size_t dim = std::size_t{1} << n;
    CHECK(pi_lambda(Partition(), n) == PolyOperator::identity(dim, one(n)));
  }
  const auto p1 = pi_lambda(Partition({1}), 1);
  CHECK(p1.entry(1, 0) == a(1, 1));
  CHECK(p1.entry(1, 1) == a(1, 1));
  CHECK(p1.nonzeros() == 2);

  std::string warning;
  CHECK(pi_lambda(Partition({1, 1}), 1, &warning).is_zero());
  CHECK_FALSE(warning.empty());

  for (int n = 1; n <= 4; ++n) {
    for (int r = 1; r <= n; ++r) {
      std::vector<int> col(static_cast<std::size_t>(r), 1);
      CHECK(pi_lambda(Partition(col), n) == hlpos::sixvertex::theta_symmetric(hlpos::symfunc::elementary_e(r, n), n));
    }
  }
}

TEST_CASE("Pi_lambda = Theta(P_lambda)") {
  for (int n = 1; n <= 4; ++n) {
    for (const auto& lambda : partitions_up_to(4, n)) {
      INFO("lambda = " << lambda.to_string() << ", n = " << n);
      CHECK(pi_lambda_cached(lambda, n) == hlpos::sixvertex::theta_P(lambda, n));
    }
  }
}

TEST_CASE("operator Pieri relation") {
  for (int n = 1; n <= 3; ++n) {
    for (const auto& lambda : partitions_up_to(3, n)) {
      for (int r = 0; r <= 2; ++r) {
        INFO("lambda = " << lambda.to_string() << ", r = " << r << ", n = " << n);
        const auto lhs = hlpos::exactalg::compose(hlpos::sixvertex::transfer_Tk(r, n), pi_lambda_cached(lambda, n));
        CHECK(lhs == pieri_operator_rhs(lambda, r, n));
      }
    }
  }
}

TEST_CASE("series Pieri relation") {
  const int n = 3;
  const std::size_t order = 2;
  const auto t_alpha = hlpos::sixvertex::transfer_T(n, order);
  for (const auto& lambda : {Partition(), Partition({1}), Partition({2}), Partition({1, 1})}) {
    INFO("lambda = " << lambda.to_string());
    const auto lhs = hlpos::exactalg::compose(t_alpha, hlpos::sixvertex::constant_series(pi_lambda_cached(lambda, n), order));
    CHECK(lhs == pieri_series_rhs(lambda, n, order));
  }
}

TEST_CASE("block compositions match the dense reference compose") {
  std::mt19937 rng(7);
  const int n = 3;
  const auto& h = transfer_H(n).full();
  for (int trial = 0; trial < 5; ++trial) {
    std::uniform_int_distribution<int> k(0, n);
    const int k1 = k(rng), k2 = k(rng), k3 = k(rng);
    const auto& ht = transfer_H(n);
    const auto x = ht.block(std::min(k1, k2), std::max(k1, k2)).op;
    const auto y = ht.block(std::max(k1, k2), std::max({k1, k2, k3})).op;
    CHECK(hlpos::exactalg::compose(y, x) == hlpos::exactalg::reference::compose(y, x));
  }
  CHECK(h.rows() == 27);
}
