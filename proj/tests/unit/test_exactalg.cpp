#include "hlpos/exactalg/multipoly.hpp"
#include "hlpos/exactalg/series.hpp"
#include "hlpos/exactalg/sparse_operator.hpp"
#include "hlpos/exactalg/upoly.hpp"

#include <doctest.h>

#include <random>

using namespace hlpos::exactalg;

namespace {

struct Vars {
  EnvPtr env = standard_env(2);
  MultiPoly one{env, Rational(1)};
  MultiPoly t = MultiPoly::variable(env, 0);
  MultiPoly a1 = MultiPoly::variable(env, 1);
  MultiPoly a2 = MultiPoly::variable(env, 2);
};

MultiPoly random_poly(std::mt19937& rng, const EnvPtr& env, int terms) {
  std::uniform_int_distribution<int> exp(0, 2), coef(-3, 3);
  std::vector<Term> ts;
  for (int i = 0; i < terms; ++i) {
    std::vector<unsigned> e(env->arity());
    for (auto& x : e) x = static_cast<unsigned>(exp(rng));
    ts.push_back({Monomial::from_exponents(e), Rational(coef(rng))});
  }
  return MultiPoly(env, std::move(ts));
}

}  // namespace

TEST_CASE("rational parsing") {
  CHECK(parse_rational("3/6") == Rational(1, 2));
  CHECK(parse_rational(" -2 ") == Rational(-2));
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
  CHECK(to_string(Rational(-3, 4)) == "-3/4");
}

TEST_CASE("monomial packing follows graded lex order") {
  const unsigned e1[] = {0, 2, 0};
  const unsigned e2[] = {1, 0, 1};
  auto m1 = Monomial::from_exponents(e1);
  auto m2 = Monomial::from_exponents(e2);
  CHECK(m1 < m2);  // same degree, t exponent decides
  CHECK(Monomial::variable(2, 3) > m2);
  CHECK((m1 * m2).exponents(3) == std::vector<unsigned>{1, 2, 1});
  CHECK((m1 * m2) / m2 == m1);
  CHECK_FALSE(m1.divisible_by(m2));
  CHECK_THROWS_AS(Monomial::variable(0, 200) * Monomial::variable(1, 100), std::overflow_error);
}

TEST_CASE("polynomial arithmetic") {
  Vars v;
  CHECK((v.one - v.t) * (v.one + v.t) == v.one - v.t * v.t);
  CHECK((v.a1 * v.t * Rational(5)) * MultiPoly(v.env) == MultiPoly(v.env));
  CHECK(((v.a1 * v.t * Rational(5)) * MultiPoly(v.env)).size() == 0);
  CHECK((v.a1 - v.t * v.a2) + (v.a2 - v.t * v.a1) == (v.one - v.t) * (v.a1 + v.a2));
  CHECK(poly_arith(v.a1, v.a2, ArithOp::sub) == v.a1 - v.a2);
  auto other = make_env({"x"});
  CHECK_THROWS_AS(v.a1 + MultiPoly::variable(other, 0), std::invalid_argument);
  // unbound constants mix with any environment
  CHECK(v.a1 + MultiPoly({}, Rational(2)) == v.a1 + v.one * Rational(2));
}

TEST_CASE("polynomial substitution") {
  Vars v;
  auto p = (v.one - v.t) * v.a1;
  CHECK(p.eval_t(0) == v.a1);
  CHECK(p.eval_t(1).is_zero());
  // t^y - t^(x+y), x = y = 1
  auto q = v.t - v.t * v.t;
  CHECK(q.eval_t(Rational(1, 2)) == MultiPoly(v.env, Rational(1, 4)));
  const Rational vals[] = {Rational(1, 2), Rational(3), Rational(-1)};
  CHECK(p.evaluate(vals) == Rational(3, 2));
}

TEST_CASE("exact division and permutation") {
  Vars v;
  auto vdm = v.a1 - v.a2;
  auto p = (v.a1 * v.a1 - v.t * v.a2) * vdm;
  auto q = p.divide_exact(vdm);
  REQUIRE(q.has_value());
  CHECK(*q == v.a1 * v.a1 - v.t * v.a2);
  CHECK_FALSE((v.a1 + v.one).divide_exact(vdm).has_value());
  const std::size_t swap[] = {0, 2, 1};
  CHECK(vdm.permute_variables(swap) == -vdm);
}

TEST_CASE("deterministic string forms") {
  Vars v;
  auto p = v.a1 * v.a1 - v.t * v.a2 * Rational(1, 2) + v.one;
  CHECK(p.pretty() == "-1/2*t*a2 + a1^2 + 1");
  CHECK(MultiPoly(v.env).to_string() == "0");
  CHECK(v.a1.to_string() == "1 * t^0 * a1^1 * a2^0");
}

TEST_CASE("property: ring axioms on random polynomials") {
  std::mt19937 rng(7);
  auto env = standard_env(3);
  for (int trial = 0; trial < 60; ++trial) {
    auto p = random_poly(rng, env, 5);
    auto q = random_poly(rng, env, 4);
    auto r = random_poly(rng, env, 3);
    CHECK(p * (q + r) == p * q + p * r);
    CHECK(p * q == q * p);
    CHECK((p - p).is_zero());
    if (!q.is_zero()) {
      auto quotient = (p * q).divide_exact(q);
      REQUIRE(quotient.has_value());
      CHECK(*quotient == p);
    }
    const Rational t0(trial % 5, 3);
    CHECK((p * q).eval_t(t0) == p.eval_t(t0) * q.eval_t(t0));
  }
}

TEST_CASE("truncated series") {
  Vars v;
  auto one = TruncSeries::constant(v.env, 2, v.one);
  auto s = TruncSeries::linear(v.env, 2, v.one, v.a1);
  auto u = TruncSeries::linear(v.env, 2, v.one, -v.a1);
  auto prod = s * u;
  CHECK(prod[0] == v.one);
  CHECK(prod[1].is_zero());
  CHECK(prod[2] == -(v.a1 * v.a1));
  CHECK(s * one == s);

  std::vector<MultiPoly> geo;
  MultiPoly pw = v.one;
  for (int k = 0; k <= 5; ++k, pw *= v.a1) geo.push_back(pw);
  auto g = TruncSeries(5, geo);
  CHECK(g * TruncSeries::linear(v.env, 5, v.one, -v.a1) == TruncSeries::constant(v.env, 5, v.one));

  auto inv = TruncSeries::linear(v.env, 3, v.one, -v.a1).inverse();
  MultiPoly expect = v.one;
  for (int k = 0; k <= 3; ++k) {
    CHECK(inv[k] == expect);
    expect *= v.a1;
  }
  CHECK(one.inverse() == one);
  auto inv_t = TruncSeries::linear(v.env, 2, v.one, -(v.t * v.a1)).inverse();
  CHECK(inv_t[2] == v.t * v.t * v.a1 * v.a1);

  CHECK_THROWS_AS(s + TruncSeries::constant(v.env, 3, v.one), std::invalid_argument);
  CHECK_THROWS_AS(TruncSeries::linear(v.env, 2, v.t, v.one).inverse(), std::domain_error);
  CHECK_THROWS_AS(TruncSeries(v.env, 2).inverse(), std::domain_error);
}

TEST_CASE("univariate rational functions") {
  const UPoly one(Rational(1));
  const UPoly t = UPoly::t_power(1);
  CHECK(RatFuncT(UPoly::one_minus_t_power(2), one - t) == RatFuncT(one + t));
  const RatFuncT f(one + t * t, one - t);
  CHECK(f / f == RatFuncT(Rational(1)));
  CHECK(RatFuncT(one, one - t) + RatFuncT(one, one + t) == RatFuncT(UPoly(Rational(2)), UPoly::one_minus_t_power(2)));
  CHECK_THROWS_AS(f / RatFuncT(), std::domain_error);
  CHECK_THROWS_AS(RatFuncT(one, UPoly()), std::domain_error);
  CHECK(UPoly::t_pochhammer(2) == (one - t) * (one - t * t));
  CHECK(gcd(UPoly::one_minus_t_power(4), UPoly::one_minus_t_power(6)) == (one - t * t).monic());
  CHECK(f.evaluate(Rational(1, 2)) == Rational(5, 2));
  CHECK_THROWS_AS(f.evaluate(1), std::domain_error);
  CHECK(ratfunc_arith(f, f, RatOp::sub).is_zero());
  auto env = standard_env(1);
  CHECK(UPoly::from_multipoly((one - t).to_multipoly(env)) == one - t);
}

TEST_CASE("sparse operator: parallel compose matches dense reference") {
  std::mt19937 rng(11);
  auto env = standard_env(2);
  std::uniform_int_distribution<int> coin(0, 3);
  auto random_op = [&](std::size_t rows, std::size_t cols) {
    SparseOperator<MultiPoly> op(rows, cols);
    for (std::size_t j = 0; j < cols; ++j) {
      SparseOperator<MultiPoly>::Column col;
      for (std::size_t i = 0; i < rows; ++i) {
        if (coin(rng) == 0) col.emplace_back(static_cast<std::uint32_t>(i), random_poly(rng, env, 2));
      }
      op.set_column(j, std::move(col));
    }
    return op;
  };
  for (int trial = 0; trial < 10; ++trial) {
    auto a = random_op(6, 5);
    auto b = random_op(5, 7);
    auto fast = compose(a, b, Exec::parallel);
    CHECK(fast == reference::compose(a, b));
    CHECK(fast == compose(a, b, Exec::serial));
  }
  auto a = random_op(4, 4);
  auto id = SparseOperator<MultiPoly>::identity(4, MultiPoly(env, Rational(1)));
  CHECK(compose(a, id) == a);
  CHECK(commutator(a, id).is_zero());
  CHECK_FALSE(first_difference(a, a).has_value());
  CHECK_THROWS_AS(compose(random_op(2, 3), random_op(2, 2)), std::invalid_argument);
}
