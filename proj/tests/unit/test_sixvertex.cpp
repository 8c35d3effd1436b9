#include "hlpos/plactic/subset.hpp"
#include "hlpos/sixvertex/r_matrix.hpp"
#include "hlpos/sixvertex/theta.hpp"
#include "hlpos/sixvertex/transfer.hpp"
#include "hlpos/symfunc/gexpansion.hpp"
#include "hlpos/symfunc/hall_littlewood.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace hlpos::sixvertex;
using hlpos::combinat::Partition;
using hlpos::combinat::partitions_up_to;
using hlpos::exactalg::Rational;
using hlpos::exactalg::standard_env;
using hlpos::exactalg::TruncSeries;

namespace {

MultiPoly one(int n) { return MultiPoly(standard_env(n), Rational(1)); }

const Rational kSamples[] = {Rational(0), Rational(1, 4), Rational(1, 2), Rational(3, 4)};

}  // namespace

TEST_CASE("R-matrix weights") {
  auto env = hlpos::exactalg::make_env({"t", "a"});
  const MultiPoly o(env, Rational(1));
  const MultiPoly t = MultiPoly::variable(env, 0);
  const MultiPoly a = MultiPoly::variable(env, 1);
  const RMatrix r(a, o, t);
  CHECK(r.outcomes(1, 1).size() == 1);
  CHECK(r.weight(1, 1, 1, 1) == r.denominator());
  for (int bottom : {1, 2}) {
    for (int left : {1, 2}) {
      MultiPoly sum(env);
      for (const auto& x : r.outcomes(bottom, left)) sum += x.weight;
      CHECK(sum == r.denominator());  // stochastic after scaling
    }
  }
  // at t = 0 the weights of 1x2 become 1 and 0
  CHECK(r.weight(1, 2, 2, 1).eval_t(0) == r.denominator().eval_t(0));
  CHECK(r.weight(1, 2, 1, 2).eval_t(0).is_zero());
  CHECK_THROWS_AS(r.outcomes(0, 1), std::invalid_argument);
}

TEST_CASE("Yang-Baxter equation") {
  const auto ok = yang_baxter_check();
  CHECK(ok.holds);
  CHECK_FALSE(ok.witness.has_value());
  const auto broken = yang_baxter_check(true);
  CHECK_FALSE(broken.holds);
  REQUIRE(broken.witness.has_value());
  CHECK(broken.differing_entries > 0);
  CHECK_FALSE(broken.difference.empty());

  // equal spectral parameters: a = b gives R12(a) R13(a) R23(1) on both sides
  auto env = hlpos::exactalg::make_env({"t", "a"});
  const MultiPoly o(env, Rational(1));
  const MultiPoly t = MultiPoly::variable(env, 0);
  const MultiPoly a = MultiPoly::variable(env, 1);
  const RMatrix ra(a, o, t), r1(a, a, t);
  const auto r12 = embed_r(ra, 1, 2), r13 = embed_r(ra, 1, 3), r23 = embed_r(r1, 2, 3);
  using hlpos::exactalg::compose;
  CHECK(compose(r12, compose(r13, r23)) == compose(r23, compose(r13, r12)));
}

TEST_CASE("transfer operator: single column") {
  const auto op = transfer_T(1, 3);
  // input 2: R(2x1) gives top 2 with (1-a)/(1-ta) and top 1 with (1-t)a/(1-ta)
  const auto* stay = op.find(0, 0);
  const auto* flip = op.find(1, 0);
  REQUIRE(stay);
  REQUIRE(flip);
  const MultiPoly t = MultiPoly::variable(standard_env(1), 0);
  const MultiPoly a = MultiPoly::variable(standard_env(1), 1);
  // (1-a)/(1-ta) = 1 + (t-1) a alpha + (t-1) t a^2 alpha^2 + ...
  CHECK((*stay)[0] == one(1));
  CHECK((*stay)[1] == (t - one(1)) * a);
  CHECK((*stay)[2] == (t - one(1)) * t * a * a);
  CHECK((*flip)[0].is_zero());
  CHECK((*flip)[1] == (one(1) - t) * a);
  // input 1 with left boundary 1 stays put with weight 1
  CHECK(op.column(1).size() == 1);
}

TEST_CASE("transfer operator: stochasticity, grading, reference agreement") {
  for (int n = 1; n <= 4; ++n) {
    const auto op = transfer_T(n, 3);
    CHECK(op == reference::transfer_T(n, 3));
    CHECK(op == transfer_T(n, 3, Exec::serial));
    const auto unit = TruncSeries::constant(standard_env(n), 3, one(n));
    for (const auto& s : op.column_sums()) CHECK(s == unit);
    for (std::size_t v = 0; v < op.cols(); ++v) {
      for (const auto& [row, c] : op.column(v)) {
        const int d = grade(row) - grade(static_cast<VState>(v));
        CHECK((d == 0 || d == 1));
      }
    }
    const auto tilde = transfer_T_tilde(n, 3);
    const auto gen = hlpos::symfunc::g_generating_series(n, 3);
    for (const auto& s : tilde.column_sums()) CHECK(s == gen);
  }
}

TEST_CASE("T_k coefficients") {
  for (int n = 1; n <= 4; ++n) {
    const std::size_t dim = std::size_t{1} << n;
    CHECK(transfer_Tk(0, n) == PolyOperator::identity(dim, one(n)));
    for (int k = 1; k <= 4; ++k) {
      const auto& tk = transfer_Tk(k, n);
      for (const auto& s : tk.column_sums()) CHECK(s == hlpos::symfunc::g_poly(k, n));
      for (std::size_t v = 0; v < dim; ++v) {
        for (const auto& [row, c] : tk.column(v)) CHECK(grade(row) >= grade(static_cast<VState>(v)));
      }
      for (int l = 1; l < k; ++l) CHECK(commutator(tk, transfer_Tk(l, n)).is_zero());
      if (k <= 3) {
        const auto at0 = tk.transform([](const MultiPoly& c) { return c.eval_t(0); });
        CHECK(at0 == hlpos::plactic::h_r_operator(k, n));
      }
    }
  }
  CHECK_THROWS_AS(series_coefficient(transfer_T(1, 2), 3), std::invalid_argument);
}

TEST_CASE("bivariate commutation of T~") {
  for (int n = 1; n <= 3; ++n) {
    const std::size_t order = 3;
    const auto tilde = transfer_T_tilde(n, order);
    for (std::size_t j = 0; j <= order; ++j) {
      // beta^j coefficient of [T~(alpha), T~(beta)] as a series in alpha
      const auto tj = constant_series(transfer_Tk(static_cast<int>(j), n), order);
      CHECK(commutator(tilde, tj).is_zero());
    }
  }
}

TEST_CASE("Theta") {
  for (int n = 1; n <= 3; ++n) {
    const std::size_t dim = std::size_t{1} << n;
    const auto id = theta(hlpos::symfunc::GExpansion::one(), n);
    CHECK(id.exact);
    CHECK(id.op == PolyOperator::identity(dim, one(n)));
    for (int k = 1; k <= 2 * n; ++k) {
      const auto r = theta(hlpos::symfunc::g_in_low_generators(k, n), n);
      CHECK(r.exact);
      CHECK(r.op == transfer_Tk(k, n));
    }
  }
  // a non-polynomial combination is flagged
  hlpos::symfunc::GExpansion bad;
  bad.add({1}, hlpos::exactalg::RatFuncT(hlpos::exactalg::UPoly(Rational(1)),
                                          hlpos::exactalg::UPoly::one_minus_t_power(2)));
  const auto flagged = theta(bad, 2);
  CHECK_FALSE(flagged.exact);
  CHECK_FALSE(flagged.diagnostic.empty());
}

TEST_CASE("Theta(P_lambda): column sums and positivity") {
  for (int n = 1; n <= 3; ++n) {
    for (const auto& lambda : partitions_up_to(3, n)) {
      const auto& op = theta_P(lambda, n);
      for (const auto& s : op.column_sums()) CHECK(s == hlpos::symfunc::hl_polynomial(lambda, n));
      for (const auto& t0 : kSamples) {
        for (const auto& col : op.columns()) {
          for (const auto& [row, c] : col) CHECK(c.eval_t(t0).has_nonnegative_coefficients());
        }
      }
    }
  }
  const auto sym = theta_symmetric(hlpos::symfunc::elementary_e(2, 3), 3);
  CHECK(sym == theta_P(Partition({1, 1}), 3));
}
