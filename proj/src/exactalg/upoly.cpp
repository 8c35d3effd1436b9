#include "hlpos/exactalg/upoly.hpp"

#include <sstream>
#include <stdexcept>

namespace hlpos::exactalg {

UPoly::UPoly(Rational constant) {
  if (sgn(constant) != 0) c_.push_back(canonical(std::move(constant)));
}

UPoly::UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
  for (auto& x : c_) x.canonicalize();
  trim();
}

void UPoly::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

UPoly UPoly::t_power(unsigned k) {
  std::vector<Rational> c(k + 1, Rational(0));
  c[k] = 1;
  return UPoly(std::move(c));
}

UPoly UPoly::one_minus_t_power(unsigned k) { return UPoly(Rational(1)) - t_power(k); }

UPoly UPoly::t_pochhammer(unsigned k) {
  UPoly p(Rational(1));
  for (unsigned m = 1; m <= k; ++m) p *= one_minus_t_power(m);
  return p;
}

Rational UPoly::evaluate(const Rational& t0) const {
  const Rational x = canonical(t0);
  Rational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UPoly& UPoly::operator+=(const UPoly& rhs) {
  if (rhs.c_.size() > c_.size()) c_.resize(rhs.c_.size(), Rational(0));
  for (std::size_t k = 0; k < rhs.c_.size(); ++k) c_[k] += rhs.c_[k];
  trim();
  return *this;
}

UPoly& UPoly::operator-=(const UPoly& rhs) { return *this += -rhs; }

UPoly& UPoly::operator*=(const UPoly& rhs) {
  if (c_.empty() || rhs.c_.empty()) {
    c_.clear();
    return *this;
  }
  std::vector<Rational> out(c_.size() + rhs.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    for (std::size_t j = 0; j < rhs.c_.size(); ++j) out[i + j] += c_[i] * rhs.c_[j];
  }
  c_ = std::move(out);
  trim();
  return *this;
}

UPoly UPoly::operator-() const {
  UPoly r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> rem = c_;
  const int dd = divisor.degree();
  if (degree() < dd) return {UPoly(), *this};
  std::vector<Rational> q(static_cast<std::size_t>(degree() - dd + 1), Rational(0));
  for (int k = degree(); k >= dd; --k) {
    const Rational f = rem[k] / divisor.leading();
    q[k - dd] = f;
    if (sgn(f) == 0) continue;
    for (int j = 0; j <= dd; ++j) rem[k - dd + j] -= f * divisor.c_[j];
  }
  return {UPoly(std::move(q)), UPoly(std::move(rem))};
}

UPoly UPoly::monic() const {
  if (is_zero()) return *this;
  UPoly r = *this;
  const Rational lead = leading();
  for (auto& x : r.c_) x /= lead;
  return r;
}

MultiPoly UPoly::to_multipoly(const EnvPtr& env) const {
  std::vector<Term> terms;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (sgn(c_[k]) != 0) terms.push_back({Monomial::variable(0, static_cast<unsigned>(k)), c_[k]});
  }
  return MultiPoly(env, std::move(terms));
}

UPoly UPoly::from_multipoly(const MultiPoly& p) {
  std::vector<Rational> c;
  for (const auto& t : p.terms()) {
    const unsigned e = t.mono.exponent(0);
    if (t.mono.degree() != e) throw std::invalid_argument("polynomial involves variables other than t");
    if (c.size() <= e) c.resize(e + 1, Rational(0));
    c[e] += t.coeff;
  }
  return UPoly(std::move(c));
}

std::string UPoly::pretty() const {
  if (c_.empty()) return "0";
  auto env = make_env({"t"});
  return to_multipoly(env).pretty();
}

UPoly gcd(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    UPoly r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

UPoly lcm(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return UPoly();
  return (a * b).divmod(gcd(a, b)).first.monic();
}

RatFuncT::RatFuncT(UPoly num) : num_(std::move(num)), den_(Rational(1)) {}

RatFuncT::RatFuncT(UPoly num, UPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
  reduce();
}

void RatFuncT::reduce() {
  if (num_.is_zero()) {
    den_ = UPoly(Rational(1));
    return;
  }
  UPoly g = gcd(num_, den_);
  num_ = num_.divmod(g).first;
  den_ = den_.divmod(g).first;
  const Rational lead = den_.leading();
  num_ = num_ * UPoly(Rational(1) / lead);
  den_ = den_.monic();
}

Rational RatFuncT::evaluate(const Rational& t0) const {
  const Rational d = den_.evaluate(t0);
  if (sgn(d) == 0) throw std::domain_error("rational function has a pole at t = " + t0.get_str());
  return num_.evaluate(t0) / d;
}

RatFuncT& RatFuncT::operator+=(const RatFuncT& rhs) {
  return *this = RatFuncT(num_ * rhs.den_ + rhs.num_ * den_, den_ * rhs.den_);
}

RatFuncT& RatFuncT::operator-=(const RatFuncT& rhs) { return *this += -rhs; }

RatFuncT& RatFuncT::operator*=(const RatFuncT& rhs) {
  return *this = RatFuncT(num_ * rhs.num_, den_ * rhs.den_);
}

RatFuncT& RatFuncT::operator/=(const RatFuncT& rhs) {
  if (rhs.is_zero()) throw std::domain_error("rational function division by zero");
  return *this = RatFuncT(num_ * rhs.den_, den_ * rhs.num_);
}

RatFuncT RatFuncT::operator-() const {
  RatFuncT r = *this;
  r.num_ = -r.num_;
  return r;
}

std::string RatFuncT::pretty() const {
  if (is_polynomial()) return num_.pretty();
  return "(" + num_.pretty() + ")/(" + den_.pretty() + ")";
}

RatFuncT ratfunc_arith(const RatFuncT& f, const RatFuncT& g, RatOp op) {
  switch (op) {
    case RatOp::add: return f + g;
    case RatOp::sub: return f - g;
    case RatOp::mul: return f * g;
    case RatOp::div: return f / g;
  }
  throw std::invalid_argument("unknown rational-function op");
}

}  // namespace hlpos::exactalg
