#pragma once

#include "hlpos/exactalg/multipoly.hpp"
#include "hlpos/exactalg/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace hlpos::exactalg {

// Dense univariate polynomial in t over the rationals. coeffs()[k] is the
// coefficient of t^k; no trailing zeros are stored.
class UPoly {
 public:
  UPoly() = default;
  UPoly(Rational constant);  // NOLINT(google-explicit-constructor)
  explicit UPoly(std::vector<Rational> coeffs);

  static UPoly t_power(unsigned k);
  // 1 - t^k
  static UPoly one_minus_t_power(unsigned k);
  // (t;t)_k = prod_{m=1..k} (1 - t^m)
  static UPoly t_pochhammer(unsigned k);

  const std::vector<Rational>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const Rational& leading() const { return c_.back(); }
  Rational coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }
  Rational evaluate(const Rational& t0) const;

  UPoly& operator+=(const UPoly& rhs);
  UPoly& operator-=(const UPoly& rhs);
  UPoly& operator*=(const UPoly& rhs);
  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(UPoly a, const UPoly& b) { return a *= b; }
  UPoly operator-() const;
  bool operator==(const UPoly&) const = default;

  // Euclidean division; throws std::domain_error on a zero divisor.
  std::pair<UPoly, UPoly> divmod(const UPoly& divisor) const;
  UPoly monic() const;

  // Embeds into a multivariate environment as a polynomial in variable 0.
  MultiPoly to_multipoly(const EnvPtr& env) const;
  // Inverse of to_multipoly; throws std::invalid_argument if `p` involves
  // any variable other than 0.
  static UPoly from_multipoly(const MultiPoly& p);

  std::string pretty() const;

 private:
  void trim();
  std::vector<Rational> c_;
};

UPoly gcd(UPoly a, UPoly b);  // monic, gcd(0,0) = 0
UPoly lcm(const UPoly& a, const UPoly& b);

// Reduced fraction num/den of univariate polynomials in t with a monic
// denominator. Zero is 0/1.
class RatFuncT {
 public:
  RatFuncT() : den_(Rational(1)) {}
  RatFuncT(UPoly num);  // NOLINT(google-explicit-constructor)
  RatFuncT(UPoly num, UPoly den);
  RatFuncT(const Rational& c) : RatFuncT(UPoly(c)) {}  // NOLINT

  const UPoly& num() const { return num_; }
  const UPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }
  Rational evaluate(const Rational& t0) const;

  RatFuncT& operator+=(const RatFuncT& rhs);
  RatFuncT& operator-=(const RatFuncT& rhs);
  RatFuncT& operator*=(const RatFuncT& rhs);
  RatFuncT& operator/=(const RatFuncT& rhs);
  friend RatFuncT operator+(RatFuncT a, const RatFuncT& b) { return a += b; }
  friend RatFuncT operator-(RatFuncT a, const RatFuncT& b) { return a -= b; }
  friend RatFuncT operator*(RatFuncT a, const RatFuncT& b) { return a *= b; }
  friend RatFuncT operator/(RatFuncT a, const RatFuncT& b) { return a /= b; }
  RatFuncT operator-() const;
  bool operator==(const RatFuncT&) const = default;

  // Re-reduces the stored fraction; a no-op on any value built through the
  // public constructors.
  RatFuncT reduced() const { return RatFuncT(num_, den_); }

  std::string pretty() const;

 private:
  void reduce();
  UPoly num_;
  UPoly den_;
};

enum class RatOp { add, sub, mul, div };
RatFuncT ratfunc_arith(const RatFuncT& f, const RatFuncT& g, RatOp op);

}  // namespace hlpos::exactalg
